/**
 * CoNLL-U rendering and a strict well-formedness check mirroring the
 * consumer's ingestion rules (10 columns, in-range heads, exactly one
 * root, no cycles).
 */

import { Document, PARSER_ID, Sentence, TokenRow } from './types';

export function renderSentence(sent: Sentence): string {
  const lines: string[] = [];
  lines.push(`# sent_id = ${sent.sentId}`);
  lines.push(`# text = ${sent.text}`);
  for (const t of sent.tokens) {
    lines.push(
      [t.id, t.form, t.lemma, t.upos, t.xpos, '_', t.head, t.deprel, '_', '_'].join('\t'),
    );
  }
  return lines.join('\n') + '\n';
}

export function renderDocument(doc: Document): string {
  const blocks: string[] = [];
  blocks.push(`# parser = ${PARSER_ID}\n# newdoc id = ${doc.docId}\n`);
  const rendered = doc.sentences.map(renderSentence);
  return blocks.join('') + rendered.join('\n');
}

export class ConlluValidationError extends Error {}

/** Throws when the text would not survive strict ingestion. */
export function validateConllu(text: string): void {
  const blocks = text.split(/\n\s*\n/);
  for (const block of blocks) {
    const rows: TokenRow[] = [];
    for (const line of block.split('\n')) {
      if (!line.trim() || line.startsWith('#')) continue;
      const cols = line.split('\t');
      if (cols.length !== 10) {
        throw new ConlluValidationError(`expected 10 columns: ${line}`);
      }
      if (cols[0].includes('-') || cols[0].includes('.')) continue;
      rows.push({
        id: Number(cols[0]),
        form: cols[1],
        lemma: cols[2],
        upos: cols[3],
        xpos: cols[4],
        head: Number(cols[6]),
        deprel: cols[7],
      });
    }
    if (rows.length === 0) continue;
    let roots = 0;
    const ids = new Set(rows.map((r) => r.id));
    for (const r of rows) {
      if (!Number.isInteger(r.id) || !Number.isInteger(r.head)) {
        throw new ConlluValidationError(`bad id/head on token ${r.id}`);
      }
      if (r.head === 0) roots++;
      else if (!ids.has(r.head)) {
        throw new ConlluValidationError(`token ${r.id} points at missing head ${r.head}`);
      }
      if (r.head === r.id) throw new ConlluValidationError(`token ${r.id} is its own head`);
    }
    if (roots !== 1) throw new ConlluValidationError(`expected one root, found ${roots}`);
    const headOf = new Map(rows.map((r) => [r.id, r.head]));
    for (const r of rows) {
      const seen = new Set<number>();
      let j = r.id;
      while (j !== 0) {
        if (seen.has(j)) throw new ConlluValidationError(`cycle through token ${r.id}`);
        seen.add(j);
        j = headOf.get(j)!;
      }
    }
  }
}
