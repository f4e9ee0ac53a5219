import { describe, expect, it } from 'vitest';

import {
    STAGE_PAYLOAD_KIND,
    buildPayload,
    firstScreen,
    remainingSteps,
    screenFor,
    validateInput,
    type ScreenInput,
} from '../src/wizard';
import { EMAIL, scaffoldDoc } from './helpers';

describe('screen mapping', () => {
    it('renders the server-claimed stage first, with server instructions', () => {
        const screen = firstScreen(scaffoldDoc());
        expect(screen.stage).toBe('await_current_tone');
        expect(screen.payloadKind).toBe('current_tone');
        expect(screen.widget).toBe('tone_picker');
        expect(screen.instructions).toBe('Read the email as the recipient.');
        expect(screen.requiresIntensity).toBe(false);
    });

    it('maps every stage to the payload kind the server expects', () => {
        for (const [stage, kind] of Object.entries(STAGE_PAYLOAD_KIND)) {
            const screen = screenFor(stage as never, scaffoldDoc());
            expect(screen.payloadKind).toBe(kind);
        }
    });

    it('requires intensity only on the target-tone screen', () => {
        expect(screenFor('no_await_target_tone', scaffoldDoc()).requiresIntensity).toBe(true);
        expect(screenFor('await_current_tone', scaffoldDoc()).requiresIntensity).toBe(false);
    });

    it('refuses ballot documents and finished tasks', () => {
        const ballot = { ...scaffoldDoc(), kind: 'ballot' as const, stage: null };
        expect(() => firstScreen(ballot)).toThrow();
        expect(() => screenFor('done', scaffoldDoc())).toThrow();
    });
});

describe('wizard path lengths', () => {
    it('shows 2 steps after a yes verdict and 4 after a no verdict', () => {
        expect(remainingSteps('yes_await_scope')).toBe(2);
        expect(remainingSteps('no_await_target_tone')).toBe(4);
        expect(remainingSteps('no_await_refinement')).toBe(1);
        expect(remainingSteps('done')).toBe(0);
    });
});

describe('submit gating', () => {
    const body = EMAIL.body;

    it('blocks empty note lists (at least one instance required)', () => {
        const screen = screenFor('yes_await_scope', scaffoldDoc());
        expect(validateInput(screen, { kind: 'notes', notes: [] }, body).ok).toBe(false);
        expect(validateInput(screen, { kind: 'notes', notes: ['  '] }, body).ok).toBe(false);
        expect(validateInput(screen, { kind: 'notes', notes: ['a note'] }, body).ok).toBe(true);
    });

    it('blocks unchanged or blank editor text', () => {
        const screen = screenFor('yes_await_improvement', scaffoldDoc());
        expect(validateInput(screen, { kind: 'text', text: '' }, body).ok).toBe(false);
        expect(validateInput(screen, { kind: 'text', text: body }, body).ok).toBe(false);
        expect(validateInput(screen, { kind: 'text', text: body + '  ' }, body).ok).toBe(false);
        expect(validateInput(screen, { kind: 'text', text: 'Politely rewritten.' }, body).ok).toBe(true);
    });

    it('requires the intensity on the target-tone picker only', () => {
        const target = screenFor('no_await_target_tone', scaffoldDoc());
        const current = screenFor('await_current_tone', scaffoldDoc());
        const unrated: ScreenInput = {
            kind: 'tone',
            tone: { primary: 'formal', secondary: 'serious', intensity: null },
        };
        expect(validateInput(target, unrated, body).ok).toBe(false);
        expect(validateInput(current, unrated, body).ok).toBe(true);
        const rated: ScreenInput = {
            kind: 'tone',
            tone: { primary: 'formal', secondary: 'serious', intensity: 'very' },
        };
        expect(validateInput(target, rated, body).ok).toBe(true);
    });

    it('rejects mismatched input kinds', () => {
        const screen = screenFor('await_verdict', scaffoldDoc());
        expect(validateInput(screen, { kind: 'text', text: 'yes' }, body).ok).toBe(false);
        expect(validateInput(screen, { kind: 'verdict', value: false }, body).ok).toBe(true);
    });
});

describe('payload building', () => {
    it('builds kind-tagged payloads the engine accepts', () => {
        const tonePayload = buildPayload(screenFor('await_current_tone', scaffoldDoc()), {
            kind: 'tone',
            tone: { primary: 'formal', secondary: 'serious', intensity: null },
        });
        expect(tonePayload).toEqual({
            kind: 'current_tone',
            tone: { primary: 'formal', secondary: 'serious', intensity: null },
        });

        const notes = buildPayload(screenFor('no_await_improvement_list', scaffoldDoc()), {
            kind: 'notes',
            notes: ['one', ' ', 'two'],
        });
        expect(notes).toEqual({ kind: 'improvement_list', items: ['one', 'two'] });

        const refinement = buildPayload(screenFor('no_await_refinement', scaffoldDoc()), {
            kind: 'text',
            text: 'Final text.',
        });
        expect(refinement).toEqual({ kind: 'refinement', text: 'Final text.' });
    });

    it('throws on input kind mismatches', () => {
        expect(() =>
            buildPayload(screenFor('await_verdict', scaffoldDoc()), { kind: 'text', text: 'y' }),
        ).toThrow();
    });
});
