/**
 * One worker's portal session: claim an assignment, walk its screens, submit
 * payloads, advance on ack. Drafts are kept per stage so a failed submission
 * never loses the worker's text; every accepted payload is recorded, which
 * is what the engine-replay contract tests consume.
 */

import { ApiError } from './api';
import { ballotModel, buildBallotPayload, type BallotInput, type BallotModel } from './ballot';
import {
    buildPayload,
    firstScreen,
    screenFor,
    validateInput,
    type Screen,
    type ScreenInput,
} from './wizard';
import type { StepAck, StepPayload, TaskDocument } from './types';

/** The slice of the API a session needs (PortalApi satisfies it). */
export interface WorkerApi {
    nextTask(workerId: string): Promise<TaskDocument | null>;
    submitStep(taskId: string, workerId: string, payload: StepPayload): Promise<StepAck>;
}

export type SessionView =
    | { kind: 'idle'; message: string }
    | { kind: 'scaffold'; screen: Screen; doc: TaskDocument; draft?: ScreenInput }
    | { kind: 'ballot'; model: BallotModel; doc: TaskDocument; draft?: BallotInput }
    | { kind: 'finished'; taskId: string };

export class PortalSession {
    private doc: TaskDocument | null = null;
    private screen: Screen | null = null;
    private model: BallotModel | null = null;
    private drafts = new Map<string, ScreenInput>();
    private ballotDraft: BallotInput | null = null;
    private lastEditorText: string | null = null;
    readonly recorded: StepPayload[] = [];

    constructor(
        private readonly api: WorkerApi,
        readonly workerId: string,
    ) {}

    get current(): SessionView {
        if (!this.doc) return { kind: 'idle', message: 'No work right now. Polling...' };
        if (this.doc.kind === 'ballot') {
            return {
                kind: 'ballot',
                model: this.model!,
                doc: this.doc,
                draft: this.ballotDraft ?? undefined,
            };
        }
        if (!this.screen) return { kind: 'finished', taskId: this.doc.task_id };
        return {
            kind: 'scaffold',
            screen: this.screen,
            doc: this.doc,
            draft: this.drafts.get(this.screen.stage),
        };
    }

    /** Poll for work; true when an assignment is live after the call. */
    async claim(): Promise<boolean> {
        if (this.doc) return true;
        const doc = await this.api.nextTask(this.workerId);
        if (!doc) return false;
        this.doc = doc;
        if (doc.kind === 'ballot') {
            this.model = ballotModel(doc);
        } else {
            this.screen = firstScreen(doc);
        }
        return true;
    }

    /** Validate without submitting (drives the submit button state). */
    check(input: ScreenInput): { ok: boolean; reason?: string } {
        if (!this.doc || !this.screen) return { ok: false, reason: 'no live step' };
        return validateInput(this.screen, input, this.doc.email.body);
    }

    /** Submit the current scaffold step; advances to the next screen on ack. */
    async submit(input: ScreenInput): Promise<StepAck> {
        if (!this.doc || this.doc.kind !== 'scaffold' || !this.screen) {
            throw new Error('no scaffold step awaiting input');
        }
        const gate = this.check(input);
        if (!gate.ok) throw new Error(gate.reason);
        const payload = buildPayload(this.screen, input);
        this.drafts.set(this.screen.stage, input);
        let ack: StepAck;
        try {
            ack = await this.api.submitStep(this.doc.task_id, this.workerId, payload);
        } catch (error) {
            // the draft is preserved; surface retry guidance for 409/422
            if (error instanceof ApiError && (error.status === 409 || error.status === 422)) {
                throw new Error(`${error.body.message} — your draft is preserved, please retry`);
            }
            throw error;
        }
        this.recorded.push(payload);
        if (input.kind === 'text') this.lastEditorText = input.text;
        if (ack.stage_after && ack.stage_after !== 'done') {
            this.screen = screenFor(ack.stage_after, this.doc);
            if (this.screen.widget === 'editor' && this.lastEditorText) {
                // refinement iterates the worker's own revision, not the original
                this.screen = { ...this.screen, seedText: this.lastEditorText };
            }
        } else {
            this.finish();
        }
        return ack;
    }

    /** Submit a consensus ballot (with refinement when the run requires it). */
    async submitBallot(input: BallotInput): Promise<StepAck> {
        if (!this.doc || this.doc.kind !== 'ballot' || !this.model) {
            throw new Error('no ballot awaiting input');
        }
        const payload = buildBallotPayload(this.model, input);
        this.ballotDraft = input;
        let ack: StepAck;
        try {
            ack = await this.api.submitStep(this.doc.task_id, this.workerId, payload);
        } catch (error) {
            if (error instanceof ApiError && (error.status === 409 || error.status === 422)) {
                throw new Error(`${error.body.message} — your vote is preserved, please retry`);
            }
            throw error;
        }
        this.recorded.push(payload);
        this.finish();
        return ack;
    }

    private finish(): void {
        this.doc = null;
        this.screen = null;
        this.model = null;
        this.drafts.clear();
        this.ballotDraft = null;
        this.lastEditorText = null;
    }
}
