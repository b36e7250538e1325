/**
 * Deterministic heuristic dependency parser producing ClearNLP-style
 * labels. It is a cascade of local attachment rules followed by a
 * clause-level pass that picks a root verb and attaches subjects,
 * objects and prepositional phrases. The output is always a single
 * well-formed tree; linguistic fidelity is best-effort.
 */

import { Tag } from './tagger';

export interface Arc {
  head: number; // 0-based index of parent, -1 for root
  deprel: string;
}

const NOMINAL = new Set(['NOUN', 'PROPN', 'PRON', 'NUM']);

function isNominalHead(tags: Tag[], heads: number[], deps: string[], i: number): boolean {
  // a nominal that is not itself attached leftward as a modifier
  return NOMINAL.has(tags[i].upos) && deps[i] !== 'compound' && deps[i] !== 'nummod';
}

export function parseSentence(forms: string[], tags: Tag[]): Arc[] {
  const n = forms.length;
  const heads: number[] = new Array(n).fill(-2); // -2 = unattached
  const deps: string[] = new Array(n).fill('');

  const attach = (child: number, head: number, rel: string) => {
    if (heads[child] !== -2 || child === head || head < -1) return;
    heads[child] = head;
    deps[child] = rel;
  };

  const lower = forms.map((f) => f.toLowerCase());
  const isVerb = (i: number) => tags[i].upos === 'VERB';
  const isFiniteVerb = (i: number) =>
    isVerb(i) && ['VBZ', 'VBP', 'VBD', 'VB'].includes(tags[i].xpos) && tags[i].xpos !== 'MD';

  // 1. nominal pre-modifiers: det / amod / nummod / compound attach to the
  //    next nominal within the base NP
  for (let i = 0; i < n; i++) {
    const t = tags[i];
    if (!['DET', 'ADJ', 'NUM', 'NOUN', 'PROPN'].includes(t.upos)) continue;
    let j = i + 1;
    while (j < n && ['ADJ', 'NUM', 'NOUN', 'PROPN', 'ADV'].includes(tags[j].upos)) j++;
    const npEnd = j - 1;
    if (npEnd <= i || !NOMINAL.has(tags[npEnd].upos)) continue;
    if (t.upos === 'DET') attach(i, npEnd, 'det');
    else if (t.upos === 'ADJ') attach(i, npEnd, 'amod');
    else if (t.upos === 'NUM') attach(i, npEnd, 'nummod');
    else if (i < npEnd) attach(i, npEnd, 'compound');
  }

  // 2. adverbs modify the next adjective/verb, else the previous verb
  for (let i = 0; i < n; i++) {
    if (tags[i].upos !== 'ADV') continue;
    if (i + 1 < n && ['ADJ', 'VERB', 'ADV'].includes(tags[i + 1].upos)) attach(i, i + 1, 'advmod');
    else {
      for (let j = i - 1; j >= 0; j--) {
        if (isVerb(j)) {
          attach(i, j, 'advmod');
          break;
        }
      }
    }
  }

  // 3. auxiliaries, negation, infinitival "to" attach to the next verb
  for (let i = 0; i < n; i++) {
    const next = nextVerb(i);
    if (next === -1) continue;
    if (tags[i].xpos === 'MD') attach(i, next, 'aux');
    else if (tags[i].upos === 'AUX') {
      attach(i, next, tags[next].xpos === 'VBN' ? 'auxpass' : 'aux');
    } else if (tags[i].upos === 'PART' && lower[i] === 'not') attach(i, next, 'neg');
    else if (lower[i] === 'to' && tags[i].upos === 'ADP' && next === i + 1) attach(i, next, 'aux');
  }

  function nextVerb(i: number): number {
    for (let j = i + 1; j < n && j <= i + 3; j++) {
      if (isVerb(j)) return j;
      if (tags[j].upos !== 'ADV' && tags[j].upos !== 'PART' && tags[j].upos !== 'AUX' && tags[j].xpos !== 'MD') break;
    }
    return -1;
  }

  // 4. root selection: first finite main verb, else first verb, else the
  //    last nominal head, else token 0
  let root = -1;
  for (let i = 0; i < n; i++) {
    if (isFiniteVerb(i) && heads[i] === -2) {
      root = i;
      break;
    }
  }
  if (root === -1) {
    for (let i = 0; i < n; i++) if (isVerb(i) && heads[i] === -2) { root = i; break; }
  }
  if (root === -1) {
    for (let i = n - 1; i >= 0; i--) if (isNominalHead(tags, heads, deps, i) && heads[i] === -2) { root = i; break; }
  }
  if (root === -1) root = 0;
  heads[root] = -1;
  deps[root] = 'root';

  // 5. relative clauses: verb right of "which/that" attaches to the
  //    nominal before the pronoun; the pronoun becomes its subject
  for (let i = 0; i < n; i++) {
    if (tags[i].xpos !== 'WDT') continue;
    const v = nextUnattachedVerb(i);
    let anchor = -1;
    for (let j = i - 1; j >= 0; j--) {
      if (tags[j].upos === 'PUNCT') continue;
      if (NOMINAL.has(tags[j].upos)) anchor = j;
      break;
    }
    if (v !== -1 && anchor !== -1 && heads[v] === -2) {
      attach(v, anchor, 'relcl');
      attach(i, v, tags[v].xpos === 'VBN' ? 'nsubjpass' : 'nsubj');
    }
  }

  function nextUnattachedVerb(i: number): number {
    for (let j = i + 1; j < n; j++) {
      if (isVerb(j) && heads[j] === -2) return j;
      if (NOMINAL.has(tags[j].upos) || tags[j].upos === 'SCONJ') break;
    }
    return -1;
  }

  // 6. clause pass per verb: subject left, object right
  const verbs: number[] = [];
  for (let i = 0; i < n; i++) if (isVerb(i) && tags[i].xpos !== 'MD') verbs.push(i);
  for (const v of verbs) {
    const passive = deps.some((d, k) => d === 'auxpass' && heads[k] === v) || (tags[v].xpos === 'VBN' && deps[v] === 'relcl');
    // subject: nearest unattached nominal head to the left
    for (let j = v - 1; j >= 0; j--) {
      if (heads[j] === -2 && isNominalHead(tags, heads, deps, j)) {
        attach(j, v, passive ? 'nsubjpass' : 'nsubj');
        break;
      }
      if (isVerb(j) || tags[j].upos === 'SCONJ') break;
    }
    // object: nearest unattached nominal head to the right, stopping at
    // verbs, prepositions and clause boundaries
    for (let j = v + 1; j < n; j++) {
      if (isVerb(j) || tags[j].upos === 'ADP' || tags[j].upos === 'SCONJ' || tags[j].xpos === ',') break;
      if (heads[j] === -2 && isNominalHead(tags, heads, deps, j)) {
        attach(j, v, 'dobj');
        break;
      }
    }
  }

  // 7. participial post-modifiers: unattached VBN directly after a
  //    nominal modifies it
  for (let i = 0; i < n; i++) {
    if (!isVerb(i) || heads[i] !== -2 || tags[i].xpos !== 'VBN') continue;
    for (let j = i - 1; j >= 0; j--) {
      if (tags[j].upos === 'PUNCT') continue;
      if (NOMINAL.has(tags[j].upos)) {
        attach(i, j, 'acl');
      }
      break;
    }
  }

  // 8. prepositions: attach to the nearest verb/nominal on the left; the
  //    "by" of a passive verb becomes agent; objects of prepositions
  for (let i = 0; i < n; i++) {
    if (tags[i].upos !== 'ADP' || heads[i] !== -2) continue;
    let head = -1;
    for (let j = i - 1; j >= 0; j--) {
      if (isVerb(j) || isNominalHead(tags, heads, deps, j) || tags[j].upos === 'ADJ') {
        head = j;
        break;
      }
    }
    if (head === -1) head = root;
    let rel = 'prep';
    if (lower[i] === 'by' && isVerb(head) && (tags[head].xpos === 'VBN' ||
        deps.some((d, k) => d === 'auxpass' && heads[k] === head))) {
      rel = 'agent';
    }
    attach(i, head, rel);
    // pobj: next nominal head to the right
    for (let j = i + 1; j < n; j++) {
      if (isVerb(j) || tags[j].upos === 'ADP') break;
      if (heads[j] === -2 && isNominalHead(tags, heads, deps, j)) {
        attach(j, i, 'pobj');
        break;
      }
    }
  }

  // 9. coordination: cc to the left conjunct's head word, conjuncts join
  //    the previous same-category head
  for (let i = 0; i < n; i++) {
    if (tags[i].upos !== 'CCONJ') continue;
    let left = -1;
    for (let j = i - 1; j >= 0; j--) {
      if (NOMINAL.has(tags[j].upos) || isVerb(j)) {
        left = j;
        break;
      }
    }
    if (left === -1) continue;
    attach(i, left, 'cc');
    for (let j = i + 1; j < n; j++) {
      if (tags[j].upos === 'PUNCT') continue;
      if (heads[j] === -2 && (NOMINAL.has(tags[j].upos) === NOMINAL.has(tags[left].upos))) {
        attach(j, left, 'conj');
      }
      break;
    }
  }

  // 10. subordinating conjunctions mark the next verb's clause
  for (let i = 0; i < n; i++) {
    if (tags[i].upos !== 'SCONJ' || heads[i] !== -2) continue;
    let v = -1;
    for (let j = i + 1; j < n; j++) if (isVerb(j)) { v = j; break; }
    if (v !== -1 && heads[v] === -2 && v !== root) {
      attach(v, root, 'advcl');
      attach(i, v, 'mark');
    } else if (v !== -1) {
      attach(i, v, 'mark');
    } else {
      attach(i, root, 'mark');
    }
  }

  // 11. punctuation and leftovers
  for (let i = 0; i < n; i++) {
    if (heads[i] !== -2) continue;
    if (tags[i].upos === 'PUNCT') {
      let j = i - 1;
      while (j >= 0 && tags[j].upos === 'PUNCT') j--;
      attach(i, j >= 0 ? j : root, 'punct');
    }
  }
  for (let i = 0; i < n; i++) {
    if (heads[i] === -2) attach(i, root, 'dep');
  }

  // 12. repair: every head chain must reach the root; the node that
  //     closes a cycle is re-attached to the root (the root itself can
  //     never sit inside a cycle, its chain ends immediately)
  for (let i = 0; i < n; i++) {
    const seen = new Set<number>();
    let j = i;
    while (j !== -1) {
      if (seen.has(j)) {
        heads[j] = root;
        deps[j] = 'dep';
        break;
      }
      seen.add(j);
      j = heads[j];
    }
  }
  // exactly one root
  for (let i = 0; i < n; i++) {
    if (heads[i] === -1 && i !== root) {
      heads[i] = root;
      deps[i] = 'dep';
    }
  }

  return heads.map((h, i) => ({ head: h, deprel: deps[i] }));
}
