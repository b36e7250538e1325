/**
 * Full text-to-CoNLL-U pipeline: sentence splitting, tokenization,
 * tagging, lemmatization and heuristic dependency parsing.
 */

import { lemmatize } from './lemmatize';
import { parseSentence } from './parse';
import { tagSentence } from './tagger';
import { splitSentences, tokenize } from './tokenize';
import { Document, Sentence, TokenRow } from './types';

export function parseDocument(docId: string, text: string): Document {
  const sentences: Sentence[] = [];
  for (const [i, raw] of splitSentences(text).entries()) {
    const forms = tokenize(raw);
    if (forms.length === 0) continue;
    const tags = tagSentence(forms);
    const arcs = parseSentence(forms, tags);
    const tokens: TokenRow[] = forms.map((form, k) => ({
      id: k + 1,
      form,
      lemma: lemmatize(form, tags[k].upos),
      upos: tags[k].upos,
      xpos: tags[k].xpos,
      head: arcs[k].head + 1, // CoNLL-U is 1-based with 0 as root
      deprel: arcs[k].deprel,
    }));
    sentences.push({ sentId: `${docId}-s${i + 1}`, text: raw, tokens });
  }
  return { docId, sentences };
}

export interface PubMedRecord {
  id: string;
  title?: string;
  abstract?: string;
}

/** Title + abstract records concatenate into one document. */
export function recordToDocument(rec: PubMedRecord): Document {
  const parts: string[] = [];
  const title = (rec.title ?? '').trim();
  if (title) parts.push(/[.!?]$/.test(title) ? title : title + '.');
  const abstract = (rec.abstract ?? '').trim();
  if (abstract) parts.push(abstract);
  return parseDocument(rec.id, parts.join(' '));
}
