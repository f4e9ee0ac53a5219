/** Wire types for the /v1 worker endpoints (mirrors the published schemas). */

export interface Taxonomy {
    primaries: string[];
    secondaries: string[];
    intensities: string[];
}

export interface Tone {
    primary: string;
    secondary: string;
    intensity: string | null;
}

export interface EmailDocument {
    sender_relationship: string;
    recipient_relationship: string;
    subject: string;
    body: string;
    context_note: string;
    sender_gender?: string | null;
    recipient_gender?: string | null;
    sender_native_language?: string | null;
    recipient_native_language?: string | null;
    hierarchy?: string | null;
    relationship_type?: string | null;
}

export type ScaffoldStage =
    | 'await_current_tone'
    | 'await_verdict'
    | 'yes_await_scope'
    | 'yes_await_improvement'
    | 'no_await_target_tone'
    | 'no_await_improvement_list'
    | 'no_await_revision'
    | 'no_await_refinement'
    | 'done';

export type PayloadKind =
    | 'current_tone'
    | 'verdict'
    | 'scope_note'
    | 'direct_improvement'
    | 'target_tone'
    | 'improvement_list'
    | 'revision'
    | 'refinement'
    | 'ballot';

export interface TaskDocument {
    task_id: string;
    email_ref: string;
    worker_id: string;
    kind: 'scaffold' | 'ballot';
    issued_at: number;
    deadline: number;
    email: EmailDocument;
    taxonomy: Taxonomy;
    stage: ScaffoldStage | null;
    allowed_payload_kind: PayloadKind;
    instructions: string;
    refinement_required?: boolean;
    pair?: { a: { body: string }; b: { body: string } };
}

export interface StepPayload {
    kind: PayloadKind;
    [key: string]: unknown;
}

export interface PipelineStatus {
    task_id: string;
    state: string;
    completed: number | null;
    timestamps: Record<string, number>;
}

export interface StepAck {
    task_id: string;
    worker_id: string;
    kind: 'scaffold' | 'ballot';
    seq: number;
    stage_after: ScaffoldStage | null;
    status: PipelineStatus;
}

export interface ApiErrorBody {
    code: string;
    message: string;
    detail?: Record<string, unknown>;
}

export interface WorkerProfile {
    worker_id: string;
    approval_rating: number;
    locale: string;
    education?: string | null;
    native_speaker?: boolean | null;
}
