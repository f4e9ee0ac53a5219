/** Minimal fetch client for the worker-facing /v1 routes. */

import type {
    ApiErrorBody,
    PipelineStatus,
    StepAck,
    StepPayload,
    TaskDocument,
    Taxonomy,
    WorkerProfile,
} from './types';

export class ApiError extends Error {
    constructor(
        public readonly status: number,
        public readonly body: ApiErrorBody,
    ) {
        super(`${body.code}: ${body.message}`);
    }

    get code(): string {
        return this.body.code;
    }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface ClientConfig {
    baseUrl: string;
    token?: string;
    fetchFn?: FetchLike;
}

export class PortalApi {
    private readonly baseUrl: string;
    private readonly token?: string;
    private readonly fetchFn: FetchLike;

    constructor(config: ClientConfig) {
        this.baseUrl = config.baseUrl.replace(/\/+$/, '');
        this.token = config.token;
        this.fetchFn = config.fetchFn ?? fetch.bind(globalThis);
    }

    private headers(): Record<string, string> {
        const headers: Record<string, string> = { 'content-type': 'application/json' };
        if (this.token) headers['authorization'] = `Bearer ${this.token}`;
        return headers;
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<T | null> {
        const response = await this.fetchFn(`${this.baseUrl}${path}`, {
            method,
            headers: this.headers(),
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        if (response.status === 204) return null;
        const doc = await response.json();
        if (!response.ok) throw new ApiError(response.status, doc as ApiErrorBody);
        return doc as T;
    }

    async taxonomy(): Promise<Taxonomy> {
        return (await this.request<Taxonomy>('GET', '/v1/taxonomy'))!;
    }

    async registerWorker(profile: WorkerProfile): Promise<void> {
        const { worker_id, ...rest } = profile;
        await this.request('PUT', `/v1/workers/${encodeURIComponent(worker_id)}`, rest);
    }

    /** Claim (or resume) the next assignment; null when nothing is open. */
    async nextTask(workerId: string): Promise<TaskDocument | null> {
        return this.request<TaskDocument>(
            'GET',
            `/v1/workers/${encodeURIComponent(workerId)}/tasks/next`,
        );
    }

    async submitStep(taskId: string, workerId: string, payload: StepPayload): Promise<StepAck> {
        const ack = await this.request<StepAck>(
            'POST',
            `/v1/tasks/${encodeURIComponent(taskId)}/steps`,
            { worker_id: workerId, payload },
        );
        return ack!;
    }

    async status(taskId: string): Promise<PipelineStatus> {
        return (await this.request<PipelineStatus>('GET', `/v1/emails/${taskId}`))!;
    }
}
