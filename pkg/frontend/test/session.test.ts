import { describe, expect, it } from 'vitest';

import { PortalSession } from '../src/session';
import { FakeServer } from './fakeserver';

describe('scaffold session', () => {
    it('walks the yes path: two screens after the verdict', async () => {
        const server = FakeServer.scaffold();
        const session = new PortalSession(server, 'w1');
        expect(await session.claim()).toBe(true);

        let view = session.current;
        expect(view.kind).toBe('scaffold');
        const screens: string[] = [];
        if (view.kind === 'scaffold') screens.push(view.screen.stage);

        await session.submit({
            kind: 'tone',
            tone: { primary: 'informal', secondary: 'serious', intensity: null },
        });
        view = session.current;
        if (view.kind === 'scaffold') screens.push(view.screen.stage);

        await session.submit({ kind: 'verdict', value: true });
        view = session.current;
        if (view.kind === 'scaffold') screens.push(view.screen.stage);

        await session.submit({ kind: 'notes', notes: ['A warmer opening'] });
        view = session.current;
        if (view.kind === 'scaffold') screens.push(view.screen.stage);

        await session.submit({ kind: 'text', text: 'A politely rewritten body.' });
        expect(session.current.kind).toBe('idle');

        expect(screens).toEqual([
            'await_current_tone',
            'await_verdict',
            'yes_await_scope',
            'yes_await_improvement',
        ]);
        expect(session.recorded.map((p) => p.kind)).toEqual([
            'current_tone',
            'verdict',
            'scope_note',
            'direct_improvement',
        ]);
    });

    it('walks the no path and seeds the refinement editor with the revision', async () => {
        const server = FakeServer.scaffold();
        const session = new PortalSession(server, 'w1');
        await session.claim();
        await session.submit({
            kind: 'tone',
            tone: { primary: 'informal', secondary: 'enraged', intensity: 'very' },
        });
        await session.submit({ kind: 'verdict', value: false });
        await session.submit({
            kind: 'tone',
            tone: { primary: 'formal', secondary: 'courteous/respectful/polite', intensity: 'very' },
        });
        await session.submit({ kind: 'notes', notes: ['Ask instead of demanding'] });
        await session.submit({ kind: 'text', text: 'Dear Professor, could I have two more days?' });
        const view = session.current;
        expect(view.kind).toBe('scaffold');
        if (view.kind === 'scaffold') {
            expect(view.screen.stage).toBe('no_await_refinement');
            // the last screen iterates the worker's own revision
            expect(view.screen.seedText).toBe('Dear Professor, could I have two more days?');
        }
        await session.submit({ kind: 'text', text: 'Dear Professor, might I have two more days? Thank you.' });
        expect(session.recorded).toHaveLength(6);
        expect(server.accepted).toEqual(session.recorded);
    });

    it('refuses to submit input the server would reject', async () => {
        const server = FakeServer.scaffold();
        const session = new PortalSession(server, 'w1');
        await session.claim();
        await expect(session.submit({ kind: 'notes', notes: [] })).rejects.toThrow();
        expect(server.accepted).toHaveLength(0);
        // draft-style gate check without submitting
        expect(session.check({ kind: 'tone', tone: { primary: '', secondary: '', intensity: null } }).ok).toBe(false);
    });
});

describe('ballot session', () => {
    it('submits a vote-only ballot when refinement is off', async () => {
        const server = FakeServer.ballot(false);
        const session = new PortalSession(server, 'v1');
        await session.claim();
        const view = session.current;
        expect(view.kind).toBe('ballot');
        if (view.kind === 'ballot') {
            expect(view.model.refinementRequired).toBe(false);
        }
        await session.submitBallot({ choice: 'a', refinedText: '' });
        expect(server.accepted).toEqual([{ kind: 'ballot', choice: 'a' }]);
    });

    it('carries the refinement when the run requires it', async () => {
        const server = FakeServer.ballot(true);
        const session = new PortalSession(server, 'v1');
        await session.claim();
        await expect(session.submitBallot({ choice: 'b', refinedText: '' })).rejects.toThrow();
        await session.submitBallot({ choice: 'b', refinedText: 'Calm version B, now warmer.' });
        expect(server.accepted).toEqual([
            { kind: 'ballot', choice: 'b', refined_text: 'Calm version B, now warmer.' },
        ]);
    });
});
