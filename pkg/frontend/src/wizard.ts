/**
 * Scaffolding step wizard: one screen per stage, no back navigation.
 *
 * The first screen comes from the claimed task document; every later screen
 * is derived from the server ack's stage_after, so the portal never renders
 * a step the server would reject. Submit stays disabled until the input
 * passes the same floor rules the engine enforces.
 */

import type { PayloadKind, ScaffoldStage, StepPayload, TaskDocument } from './types';

export const STAGE_PAYLOAD_KIND: Record<Exclude<ScaffoldStage, 'done'>, PayloadKind> = {
    await_current_tone: 'current_tone',
    await_verdict: 'verdict',
    yes_await_scope: 'scope_note',
    yes_await_improvement: 'direct_improvement',
    no_await_target_tone: 'target_tone',
    no_await_improvement_list: 'improvement_list',
    no_await_revision: 'revision',
    no_await_refinement: 'refinement',
};

export type Widget =
    | 'tone_picker'
    | 'yes_no'
    | 'note_list'
    | 'editor';

export interface Screen {
    stage: ScaffoldStage;
    payloadKind: PayloadKind;
    widget: Widget;
    title: string;
    instructions: string;
    /** tone pickers only: whether the intensity rating is mandatory */
    requiresIntensity: boolean;
    /** editors only: text the worker starts from */
    seedText: string;
}

const TITLES: Record<Exclude<ScaffoldStage, 'done'>, string> = {
    await_current_tone: 'Identify the current tone',
    await_verdict: 'Is this the right tone?',
    yes_await_scope: 'What could still be improved?',
    yes_await_improvement: 'Make the improvements',
    no_await_target_tone: 'Identify the right tone',
    no_await_improvement_list: 'List what needs to change',
    no_await_revision: 'Revise the email',
    no_await_refinement: 'Fine-tune your revision',
};

const FALLBACK_INSTRUCTIONS: Record<Exclude<ScaffoldStage, 'done'>, string> = {
    await_current_tone:
        'Read the email as its recipient would. Pick the primary and secondary tone it has right now; rate the closeness if you can.',
    await_verdict: 'Decide whether the current tone is right for this email and its context.',
    yes_await_scope: 'List at least one instance of text that could still be improved.',
    yes_await_improvement:
        'Use your own notes as instructions and edit the email directly. The text must change.',
    no_await_target_tone:
        'Choose the ideal primary and secondary tone, and how closely the email should match them. The closeness rating is required.',
    no_await_improvement_list:
        'Be specific: list as many instances to improve as you can (at least one).',
    no_await_revision: 'Revise and improve the email directly using your list.',
    no_await_refinement: 'Iterate once more on your own revision to fine-tune the tone.',
};

export function firstScreen(doc: TaskDocument): Screen {
    if (doc.kind !== 'scaffold' || doc.stage === null || doc.stage === 'done') {
        throw new Error(`not an open scaffold task: ${doc.task_id}`);
    }
    return screenFor(doc.stage, doc, doc.instructions);
}

export function screenFor(
    stage: ScaffoldStage,
    doc: TaskDocument,
    instructions?: string,
): Screen {
    if (stage === 'done') throw new Error('task is complete; no screen to render');
    const kind = STAGE_PAYLOAD_KIND[stage];
    const widget: Widget =
        kind === 'current_tone' || kind === 'target_tone'
            ? 'tone_picker'
            : kind === 'verdict'
              ? 'yes_no'
              : kind === 'scope_note' || kind === 'improvement_list'
                ? 'note_list'
                : 'editor';
    let seedText = '';
    if (widget === 'editor') {
        // later drafts build on the worker's own revision, kept by the session
        seedText = doc.email.body;
    }
    return {
        stage,
        payloadKind: kind,
        widget,
        title: TITLES[stage],
        instructions: instructions ?? FALLBACK_INSTRUCTIONS[stage],
        requiresIntensity: kind === 'target_tone',
        seedText,
    };
}

export interface ToneInput {
    primary: string;
    secondary: string;
    intensity: string | null;
}

export type ScreenInput =
    | { kind: 'tone'; tone: ToneInput }
    | { kind: 'verdict'; value: boolean }
    | { kind: 'notes'; notes: string[] }
    | { kind: 'text'; text: string };

export interface Validation {
    ok: boolean;
    reason?: string;
}

/** Submit-button gate: mirrors the engine's floor rules. */
export function validateInput(screen: Screen, input: ScreenInput, originalBody: string): Validation {
    switch (screen.widget) {
        case 'tone_picker': {
            if (input.kind !== 'tone') return { ok: false, reason: 'pick a tone' };
            if (!input.tone.primary) return { ok: false, reason: 'pick a primary tone' };
            if (!input.tone.secondary) return { ok: false, reason: 'pick a secondary tone' };
            if (screen.requiresIntensity && !input.tone.intensity) {
                return { ok: false, reason: 'the closeness rating is required here' };
            }
            return { ok: true };
        }
        case 'yes_no':
            return input.kind === 'verdict' ? { ok: true } : { ok: false, reason: 'answer yes or no' };
        case 'note_list': {
            if (input.kind !== 'notes') return { ok: false, reason: 'add a note' };
            const kept = input.notes.filter((n) => n.trim() !== '');
            if (kept.length === 0) return { ok: false, reason: 'list at least one item' };
            return { ok: true };
        }
        case 'editor': {
            if (input.kind !== 'text') return { ok: false, reason: 'edit the email' };
            if (input.text.trim() === '') return { ok: false, reason: 'the email cannot be empty' };
            if (input.text.trim() === originalBody.trim()) {
                return { ok: false, reason: 'the text must differ from the original email' };
            }
            return { ok: true };
        }
    }
}

/** Build the JSON step payload the engine expects for this screen. */
export function buildPayload(screen: Screen, input: ScreenInput): StepPayload {
    const invalid = (reason: string) => new Error(`invalid input for ${screen.stage}: ${reason}`);
    switch (screen.payloadKind) {
        case 'current_tone':
        case 'target_tone': {
            if (input.kind !== 'tone') throw invalid('expected a tone');
            const tone = {
                primary: input.tone.primary,
                secondary: input.tone.secondary,
                intensity: input.tone.intensity ?? null,
            };
            return { kind: screen.payloadKind, tone };
        }
        case 'verdict': {
            if (input.kind !== 'verdict') throw invalid('expected yes/no');
            return { kind: 'verdict', value: input.value };
        }
        case 'scope_note': {
            if (input.kind !== 'notes') throw invalid('expected notes');
            return { kind: 'scope_note', notes: input.notes.filter((n) => n.trim() !== '') };
        }
        case 'improvement_list': {
            if (input.kind !== 'notes') throw invalid('expected notes');
            return { kind: 'improvement_list', items: input.notes.filter((n) => n.trim() !== '') };
        }
        case 'direct_improvement':
        case 'revision':
        case 'refinement': {
            if (input.kind !== 'text') throw invalid('expected text');
            return { kind: screen.payloadKind, text: input.text };
        }
        default:
            throw invalid(`unsupported payload kind ${screen.payloadKind}`);
    }
}

/** Wizard progress: how many screens each path shows after the verdict. */
export function remainingSteps(stage: ScaffoldStage): number {
    const order: ScaffoldStage[] = [
        'await_current_tone',
        'await_verdict',
        'yes_await_scope',
        'yes_await_improvement',
        'no_await_target_tone',
        'no_await_improvement_list',
        'no_await_revision',
        'no_await_refinement',
    ];
    if (stage === 'done') return 0;
    if (stage.startsWith('yes_')) {
        return order.indexOf('yes_await_improvement') - order.indexOf(stage) + 1;
    }
    if (stage.startsWith('no_')) {
        return order.indexOf('no_await_refinement') - order.indexOf(stage) + 1;
    }
    // before the verdict the path length is unknown; count to the verdict
    return order.indexOf('await_verdict') - order.indexOf(stage) + 1;
}
