import type { TaskDocument } from '../src/types';
import taxonomy from '../fixtures/taxonomy.json';

export const EMAIL = {
    sender_relationship: 'student',
    recipient_relationship: 'professor',
    subject: 'Need an extension',
    body: 'I need more time! Give me an extension!',
    context_note: 'Missed deadline, asking for two more days.',
};

export function scaffoldDoc(stage = 'await_current_tone'): TaskDocument {
    return {
        task_id: 'ct-000001.scaffold.w1',
        email_ref: 'ct-000001',
        worker_id: 'w1',
        kind: 'scaffold',
        issued_at: 1,
        deadline: 1801,
        email: EMAIL,
        taxonomy,
        stage: stage as TaskDocument['stage'],
        allowed_payload_kind: 'current_tone',
        instructions: 'Read the email as the recipient.',
    };
}
