/**
 * Browser bootstrap: polls for work and wires the rendered widgets to the
 * session. Configuration comes from query params:
 *   ?api=<base url>&worker=<id>&token=<bearer>
 */

import { PortalApi } from './api';
import { PortalSession } from './session';
import { renderBallot, renderIdle, renderScreen } from './render';
import type { ScreenInput } from './wizard';
import type { BallotInput } from './ballot';

const POLL_INTERVAL_MS = 3000;

function config() {
    const params = new URLSearchParams(window.location.search);
    return {
        baseUrl: params.get('api') ?? window.location.origin,
        workerId: params.get('worker') ?? 'anonymous',
        token: params.get('token') ?? undefined,
    };
}

function readScaffoldInput(root: HTMLElement, kind: string): ScreenInput | null {
    if (kind === 'current_tone' || kind === 'target_tone') {
        const pick = (name: string) =>
            (root.querySelector(`input[name="${name}"]:checked`) as HTMLInputElement | null)?.value ?? '';
        const intensity = pick('intensity');
        return {
            kind: 'tone',
            tone: { primary: pick('primary'), secondary: pick('secondary'), intensity: intensity || null },
        };
    }
    if (kind === 'scope_note' || kind === 'improvement_list') {
        const notes = Array.from(root.querySelectorAll('[data-notes] li')).map(
            (li) => li.textContent ?? '',
        );
        return { kind: 'notes', notes };
    }
    if (kind === 'direct_improvement' || kind === 'revision' || kind === 'refinement') {
        const editor = root.querySelector('[data-editor]') as HTMLTextAreaElement | null;
        return { kind: 'text', text: editor?.value ?? '' };
    }
    return null;
}

class PortalController {
    constructor(
        private readonly root: HTMLElement,
        private readonly session: PortalSession,
    ) {}

    async tick(): Promise<void> {
        const claimed = await this.session.claim();
        if (!claimed) {
            this.root.innerHTML = renderIdle('No open tasks. Checking again shortly...');
            window.setTimeout(() => void this.tick(), POLL_INTERVAL_MS);
            return;
        }
        this.render();
    }

    private render(): void {
        const view = this.session.current;
        if (view.kind === 'idle' || view.kind === 'finished') {
            // task finished: thank the worker and look for the next one
            this.root.innerHTML = renderIdle('Task complete. Looking for your next task...');
            window.setTimeout(() => void this.tick(), POLL_INTERVAL_MS);
            return;
        }
        if (view.kind === 'ballot') {
            this.root.innerHTML = renderBallot(view.model, view.doc.email);
            this.wireBallot();
            return;
        }
        this.root.innerHTML = renderScreen(view.screen, view.doc.email, view.doc.taxonomy);
        this.wireScaffold();
    }

    private async submitScaffold(input: ScreenInput): Promise<void> {
        try {
            await this.session.submit(input);
        } catch (error) {
            window.alert(String(error));
        }
        this.render();
    }

    private wireScaffold(): void {
        const step = this.root.querySelector('.step') as HTMLElement;
        const submit = this.root.querySelector('[data-submit]') as HTMLButtonElement;
        const kind = step.dataset.kind ?? '';

        const revalidate = () => {
            const input = readScaffoldInput(step, kind);
            submit.disabled = !input || !this.session.check(input).ok;
        };
        step.addEventListener('change', revalidate);
        step.addEventListener('input', revalidate);

        for (const button of step.querySelectorAll('[data-verdict]')) {
            button.addEventListener('click', () => {
                const value = (button as HTMLElement).dataset.verdict === 'yes';
                void this.submitScaffold({ kind: 'verdict', value });
            });
        }

        const addNote = step.querySelector('[data-add-note]');
        addNote?.addEventListener('click', () => {
            const entry = step.querySelector('[data-note-entry]') as HTMLInputElement;
            if (entry.value.trim() === '') return;
            const li = document.createElement('li');
            li.textContent = entry.value;
            step.querySelector('[data-notes]')?.appendChild(li);
            entry.value = '';
            revalidate();
        });

        submit.addEventListener('click', () => {
            const input = readScaffoldInput(step, kind);
            if (input) void this.submitScaffold(input);
        });
    }

    private wireBallot(): void {
        const section = this.root.querySelector('.ballot') as HTMLElement;
        const submit = this.root.querySelector('[data-submit]') as HTMLButtonElement;

        const read = (): BallotInput => ({
            choice:
                ((section.querySelector('input[name="choice"]:checked') as HTMLInputElement | null)
                    ?.value as 'a' | 'b' | null) ?? null,
            refinedText:
                (section.querySelector('[data-refinement]') as HTMLTextAreaElement | null)?.value ?? '',
        });

        const revalidate = () => {
            const view = this.session.current;
            if (view.kind !== 'ballot') return;
            const input = read();
            submit.disabled =
                input.choice === null ||
                (view.model.refinementRequired && input.refinedText.trim() === '');
        };
        section.addEventListener('change', revalidate);
        section.addEventListener('input', revalidate);

        submit.addEventListener('click', async () => {
            try {
                await this.session.submitBallot(read());
            } catch (error) {
                window.alert(String(error));
            }
            this.render();
        });
    }
}

export async function start(): Promise<void> {
    const { baseUrl, workerId, token } = config();
    const api = new PortalApi({ baseUrl, token });
    const session = new PortalSession(api, workerId);
    const root = document.getElementById('portal')!;
    await new PortalController(root, session).tick();
}

if (typeof document !== 'undefined' && document.getElementById('portal')) {
    void start();
}
