/**
 * POS tagging: a closed-class lexicon, a verb list seeded with the
 * causal-trigger verbs, then suffix heuristics, defaulting to NOUN.
 * Tags are emitted at two granularities (PTB-style and universal).
 */

export interface Tag {
  upos: string;
  xpos: string;
}

const DETERMINERS = new Set(['a', 'an', 'the', 'this', 'that', 'these', 'those', 'some', 'all', 'any', 'each', 'every', 'no', 'both']);
const PREPOSITIONS = new Set(['of', 'in', 'on', 'at', 'by', 'for', 'with', 'to', 'from', 'into', 'during', 'after', 'before', 'between', 'under', 'over', 'through', 'about', 'against', 'among', 'within', 'without', 'upon', 'toward', 'towards', 'via', 'per', 'like', 'as']);
const PRONOUNS_PRP = new Set(['i', 'you', 'he', 'she', 'it', 'we', 'they', 'me', 'him', 'her', 'us', 'them']);
const PRONOUNS_WDT = new Set(['which', 'that', 'what', 'whatever']);
const CCONJ = new Set(['and', 'or', 'but', 'nor', 'yet']);
const SCONJ = new Set(['because', 'although', 'though', 'while', 'whereas', 'if', 'since', 'unless', 'until', 'when', 'whether']);
const MODALS = new Set(['can', 'could', 'may', 'might', 'shall', 'should', 'will', 'would', 'must']);
const BE_FORMS: Record<string, string> = { am: 'VBP', is: 'VBZ', are: 'VBP', was: 'VBD', were: 'VBD', be: 'VB', been: 'VBN', being: 'VBG' };
const HAVE_DO: Record<string, string> = { have: 'VBP', has: 'VBZ', had: 'VBD', do: 'VBP', does: 'VBZ', did: 'VBD' };
const ADVERBS = new Set(['not', 'never', 'also', 'very', 'only', 'just', 'here', 'there', 'almost', 'often', 'primarily', 'highly', 'rapidly', 'significantly', 'markedly', 'overnight', 'however', 'moreover', 'furthermore', 'thus', 'therefore']);

// base forms of verbs the pipeline must recognize even without
// morphological cues; includes the causal trigger verbs
export const VERB_STEMS = new Set([
  'be', 'have', 'do', 'show', 'use', 'find', 'observe', 'report', 'belong',
  'study', 'treat', 'develop', 'occur', 'remain', 'appear', 'suggest',
  'indicate', 'demonstrate', 'include', 'contain', 'obtain', 'perform',
  'detect', 'identify', 'analyze', 'examine', 'evaluate', 'compare',
  'synergize', 'establish', 'recover', 'play', 'lead', 'result', 'die',
  'activate', 'bring', 'cause', 'contribute', 'create', 'derive', 'elicit',
  'entail', 'evoke', 'generate', 'give', 'implicate', 'originate',
  'provoke', 'stem', 'stimulate', 'coadministrate', 'down-regulate',
  'up-regulate', 'upregulate', 'downregulate', 'co-express', 're-express',
  'over-express', 'dysregulate', 'degranulate', 'ablate', 'abrogate',
  'accelerate', 'advance', 'affect', 'alter', 'attenuate', 'benefit',
  'block', 'convert', 'decrease', 'degrade', 'delineate', 'deplete',
  'deregulate', 'diminish', 'discharge', 'disrupt', 'disseminate',
  'divide', 'elevate', 'eliminate', 'enforce', 'enhance', 'enrich',
  'eradicate', 'exacerbate', 'exert', 'expand', 'extend', 'fuse', 'govern',
  'impact', 'impair', 'improve', 'increase', 'induce', 'infect',
  'infiltrate', 'influence', 'inhibit', 'inject', 'intensify', 'kill',
  'knock', 'maximize', 'mediate', 'minimize', 'optimize', 'portend',
  'prevent', 'produce', 'proliferate', 'prolong', 'protect', 'reactivate',
  'reduce', 'regain', 'regulate', 'relapse', 'remove', 'replicate',
  'repress', 'reproduce', 'rescue', 'restore', 'reverse', 'revert',
  'sensitize', 'shorten', 'stabilize', 'substitute', 'suppress',
  'transfer', 'transform', 'trigger', 'transplant', 'escalate',
  'complicate', 'express', 'progress', 'decline', 'predispose',
  'translate', 'secrete', 'unblock', 'grow', 'remit', 'potentiate',
  'abolish', 'drive', 'modulate', 'amplify', 'antagonize', 'destruct',
  'destroy', 'lower',
]);

import { lemmatizeVerb } from './lemmatize';

const PUNCT_XPOS: Record<string, string> = {
  ',': ',', '.': '.', ';': ':', ':': ':', '(': '-LRB-', ')': '-RRB-',
  '[': '-LRB-', ']': '-RRB-', '"': "''", "'": "''", '!': '.', '?': '.',
};

export function tagToken(form: string, index: number, prevTag: Tag | null): Tag {
  const lower = form.toLowerCase();
  if (PUNCT_XPOS[form] !== undefined) return { upos: 'PUNCT', xpos: PUNCT_XPOS[form] };
  if (/^[^A-Za-z0-9]+$/.test(form)) return { upos: 'PUNCT', xpos: ':' };
  if (/^\d+([.,]\d+)*%?$/.test(form)) return { upos: 'NUM', xpos: 'CD' };
  if (lower === 'to') {
    return { upos: 'ADP', xpos: 'IN' };
  }
  if (MODALS.has(lower)) return { upos: 'VERB', xpos: 'MD' };
  if (BE_FORMS[lower]) return { upos: 'AUX', xpos: BE_FORMS[lower] };
  if (HAVE_DO[lower]) return { upos: 'AUX', xpos: HAVE_DO[lower] };
  if (DETERMINERS.has(lower)) return { upos: 'DET', xpos: 'DT' };
  if (PRONOUNS_PRP.has(lower)) return { upos: 'PRON', xpos: 'PRP' };
  if (lower === 'which' || lower === 'whatever') return { upos: 'PRON', xpos: 'WDT' };
  if (lower === 'who' || lower === 'whom') return { upos: 'PRON', xpos: 'WP' };
  if (CCONJ.has(lower)) return { upos: 'CCONJ', xpos: 'CC' };
  if (SCONJ.has(lower)) return { upos: 'SCONJ', xpos: 'IN' };
  if (PREPOSITIONS.has(lower)) return { upos: 'ADP', xpos: 'IN' };
  if (lower === 'not' || lower === "n't") return { upos: 'PART', xpos: 'RB' };
  if (ADVERBS.has(lower)) return { upos: 'ADV', xpos: 'RB' };
  if (lower.endsWith('ly') && lower.length > 3) return { upos: 'ADV', xpos: 'RB' };

  // verb morphology against the stem list
  const stem = lemmatizeVerb(lower);
  if (VERB_STEMS.has(stem)) {
    if (lower.endsWith('ing')) return { upos: 'VERB', xpos: 'VBG' };
    if (lower.endsWith('ed') || stemIrregularPast(lower)) {
      // participle after an auxiliary reads as VBN, else simple past
      const passiveish = prevTag !== null && (prevTag.upos === 'AUX' || prevTag.xpos === 'MD');
      return { upos: 'VERB', xpos: passiveish ? 'VBN' : 'VBD' };
    }
    if (lower.endsWith('s') && stem !== lower) return { upos: 'VERB', xpos: 'VBZ' };
    if (prevTag !== null && prevTag.xpos === 'MD') return { upos: 'VERB', xpos: 'VB' };
    if (prevTag !== null && prevTag.upos === 'ADP' && stem === lower) return { upos: 'VERB', xpos: 'VB' };
    return { upos: 'VERB', xpos: index === 0 ? 'VB' : 'VBP' };
  }

  if (/^[A-Z][A-Z0-9/-]+$/.test(form) || (/^[A-Z]/.test(form) && index > 0)) {
    return { upos: 'PROPN', xpos: 'NNP' };
  }
  if (/(ous|ive|ic|al|ar|ary|able|ible|ant|ent|oid|like|positive|negative|specific|related|induced|mediated|dependent|free|term)$/.test(lower) && lower.includes('-')) {
    return { upos: 'ADJ', xpos: 'JJ' };
  }
  if (/(ous|ive|ic|al|ar|ary|able|ible|oid|ile)$/.test(lower)) return { upos: 'ADJ', xpos: 'JJ' };
  if (/(tion|sion|ment|ness|ity|ism|osis|emia|oma|ase|ance|ence)s?$/.test(lower)) {
    return { upos: 'NOUN', xpos: lower.endsWith('s') && !/(osis|ness)$/.test(lower) ? 'NNS' : 'NN' };
  }
  if (lower.endsWith('s') && !lower.endsWith('ss') && lower.length > 3) {
    return { upos: 'NOUN', xpos: 'NNS' };
  }
  return { upos: 'NOUN', xpos: 'NN' };
}

function stemIrregularPast(lower: string): boolean {
  return ['led', 'grew', 'grown', 'drove', 'driven', 'brought', 'gave', 'given', 'found', 'shown'].includes(lower);
}

export function tagSentence(forms: string[]): Tag[] {
  const tags: Tag[] = [];
  for (let i = 0; i < forms.length; i++) {
    tags.push(tagToken(forms[i], i, i > 0 ? tags[i - 1] : null));
  }
  return tags;
}
