/** Consensus ballot page: side-by-side comparison, one choice, optional refinement. */

import type { StepPayload, TaskDocument } from './types';

export interface BallotModel {
    taskId: string;
    instructions: string;
    versionA: string;
    versionB: string;
    refinementRequired: boolean;
}

export function ballotModel(doc: TaskDocument): BallotModel {
    if (doc.kind !== 'ballot' || !doc.pair) {
        throw new Error(`not a ballot task: ${doc.task_id}`);
    }
    return {
        taskId: doc.task_id,
        instructions: doc.instructions,
        versionA: doc.pair.a.body,
        versionB: doc.pair.b.body,
        refinementRequired: doc.refinement_required === true,
    };
}

export interface BallotInput {
    choice: 'a' | 'b' | null;
    refinedText: string;
}

export function validateBallot(model: BallotModel, input: BallotInput): { ok: boolean; reason?: string } {
    if (input.choice !== 'a' && input.choice !== 'b') {
        return { ok: false, reason: 'choose one version' };
    }
    if (model.refinementRequired && input.refinedText.trim() === '') {
        return { ok: false, reason: 'add your refinement of the chosen version' };
    }
    return { ok: true };
}

export function buildBallotPayload(model: BallotModel, input: BallotInput): StepPayload {
    const check = validateBallot(model, input);
    if (!check.ok || input.choice === null) {
        throw new Error(`invalid ballot: ${check.reason}`);
    }
    const payload: StepPayload = { kind: 'ballot', choice: input.choice };
    if (model.refinementRequired) {
        payload.refined_text = input.refinedText;
    }
    return payload;
}

/** Editor seed when refining: start from the chosen version's text. */
export function refinementSeed(model: BallotModel, choice: 'a' | 'b'): string {
    return choice === 'a' ? model.versionA : model.versionB;
}
