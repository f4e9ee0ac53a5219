/** HTML rendering for the wizard and ballot screens (plain strings, no framework). */

import type { BallotModel } from './ballot';
import type { Screen } from './wizard';
import type { EmailDocument, Taxonomy } from './types';

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;')
        .replace(/'/g, '&#39;');
}

function radioGroup(name: string, options: string[], legend: string, required: boolean): string {
    const items = options
        .map(
            (option) =>
                `<label class="option"><input type="radio" name="${name}" value="${escapeHtml(option)}"${required ? ' required' : ''}><span>${escapeHtml(option)}</span></label>`,
        )
        .join('\n    ');
    return `<fieldset class="picker" data-picker="${name}">
  <legend>${escapeHtml(legend)}</legend>
    ${items}
</fieldset>`;
}

/** Tone pickers: exactly the option lists served by the taxonomy endpoint. */
export function renderTonePicker(taxonomy: Taxonomy, requireIntensity: boolean): string {
    const parts = [
        radioGroup('primary', taxonomy.primaries, 'Primary tone', true),
        radioGroup('secondary', taxonomy.secondaries, 'Secondary tone', true),
        radioGroup(
            'intensity',
            taxonomy.intensities,
            requireIntensity ? 'How closely should it match?' : 'How closely does it match? (optional)',
            requireIntensity,
        ),
    ];
    return `<div class="tone-picker">\n${parts.join('\n')}\n</div>`;
}

export function renderEmail(email: EmailDocument): string {
    const optional: string[] = [];
    const labels: Array<[keyof EmailDocument, string]> = [
        ['sender_gender', 'Sender gender'],
        ['recipient_gender', 'Recipient gender'],
        ['sender_native_language', 'Sender native language'],
        ['recipient_native_language', 'Recipient native language'],
        ['hierarchy', 'Hierarchy'],
        ['relationship_type', 'Relationship'],
    ];
    for (const [key, label] of labels) {
        const value = email[key];
        if (typeof value === 'string' && value.trim() !== '') {
            optional.push(`<dt>${label}</dt><dd>${escapeHtml(value)}</dd>`);
        }
    }
    return `<section class="email">
  <h2>${escapeHtml(email.subject)}</h2>
  <dl class="context">
    <dt>From</dt><dd>${escapeHtml(email.sender_relationship)}</dd>
    <dt>To</dt><dd>${escapeHtml(email.recipient_relationship)}</dd>
    <dt>Context</dt><dd>${escapeHtml(email.context_note)}</dd>
    ${optional.join('\n    ')}
  </dl>
  <pre class="body">${escapeHtml(email.body)}</pre>
</section>`;
}

export function renderScreen(screen: Screen, email: EmailDocument, taxonomy: Taxonomy): string {
    let widget: string;
    switch (screen.widget) {
        case 'tone_picker':
            widget = renderTonePicker(taxonomy, screen.requiresIntensity);
            break;
        case 'yes_no':
            widget = `<div class="verdict">
  <button type="button" data-verdict="yes">Yes, the tone is right</button>
  <button type="button" data-verdict="no">No, it needs a different tone</button>
</div>`;
            break;
        case 'note_list':
            widget = `<div class="note-list">
  <ul data-notes></ul>
  <input type="text" data-note-entry placeholder="Add an item...">
  <button type="button" data-add-note>Add</button>
</div>`;
            break;
        case 'editor':
            widget = `<textarea class="editor" data-editor rows="14">${escapeHtml(screen.seedText)}</textarea>`;
            break;
    }
    return `<section class="step" data-stage="${screen.stage}" data-kind="${screen.payloadKind}">
  <h1>${escapeHtml(screen.title)}</h1>
  <p class="instructions">${escapeHtml(screen.instructions)}</p>
${renderEmail(email)}
${widget}
  <button type="submit" data-submit disabled>Submit</button>
</section>`;
}

export function renderBallot(model: BallotModel, email: EmailDocument): string {
    const refinement = model.refinementRequired
        ? `<div class="refinement">
  <h3>Improve your chosen version once more</h3>
  <textarea data-refinement rows="12"></textarea>
</div>`
        : '';
    return `<section class="ballot" data-task="${escapeHtml(model.taskId)}">
  <h1>Which version has the better tone?</h1>
  <p class="instructions">${escapeHtml(model.instructions)}</p>
${renderEmail(email)}
  <div class="versions">
    <label class="version"><input type="radio" name="choice" value="a">
      <pre>${escapeHtml(model.versionA)}</pre></label>
    <label class="version"><input type="radio" name="choice" value="b">
      <pre>${escapeHtml(model.versionB)}</pre></label>
  </div>
${refinement}
  <button type="submit" data-submit disabled>Submit vote</button>
</section>`;
}

export function renderIdle(message: string): string {
    return `<section class="idle"><p>${escapeHtml(message)}</p></section>`;
}
