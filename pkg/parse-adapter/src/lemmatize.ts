/**
 * Rule-based English lemmatizer: an exception table for irregulars, then
 * inflectional suffix stripping with consonant-doubling undo. Lemmas are
 * lowercase.
 */

const EXCEPTIONS: Record<string, string> = {
  was: 'be', were: 'be', is: 'be', are: 'be', am: 'be', been: 'be', being: 'be',
  has: 'have', had: 'have', having: 'have',
  did: 'do', does: 'do', done: 'do', doing: 'do',
  led: 'lead', grew: 'grow', grown: 'grow', drove: 'drive', driven: 'drive',
  brought: 'bring', gave: 'give', given: 'give', found: 'find', shown: 'show',
  mice: 'mouse', men: 'man', women: 'woman', children: 'child', feet: 'foot',
  data: 'datum', analyses: 'analysis', hypotheses: 'hypothesis',
  lines: 'line', rates: 'rate', cases: 'case', types: 'type', cells: 'cell',
  monkeys: 'monkey', patients: 'patient', cultures: 'culture',
  antigens: 'antigen', particles: 'particle', isoforms: 'isoform',
  proteins: 'protein', lymphomas: 'lymphoma', glucocorticoids: 'glucocorticoid',
};

// s-final words that are not plurals: never strip these
const KEEP_AS_IS = new Set([
  'this', 'his', 'its', 'as', 'us', 'yes', 'less', 'perhaps',
  'apoptosis', 'diagnosis', 'prognosis', 'eosinophilia',
]);

const VOWELS = new Set(['a', 'e', 'i', 'o', 'u']);

function stripPlural(lower: string): string {
  if (lower.endsWith('ies') && lower.length > 4) return lower.slice(0, -3) + 'y';
  // -es after a sibilant cluster (passes, boxes, watches); a single s
  // before -es means the stem itself ends in -se (doses, causes)
  if (/(ss|x|z|ch|sh)es$/.test(lower)) return lower.slice(0, -2);
  if (lower.endsWith('s') && !lower.endsWith('ss') && !lower.endsWith('us') && lower.length > 3) {
    return lower.slice(0, -1);
  }
  return lower;
}

/** Undo -ed/-ing/-s verb inflection. */
export function lemmatizeVerb(lower: string): string {
  if (EXCEPTIONS[lower]) return EXCEPTIONS[lower];
  if (lower.endsWith('ying') && lower.length > 5) return lower.slice(0, -4) + 'y';
  if (lower.endsWith('ing') && lower.length > 4) {
    const base = lower.slice(0, -3);
    if (base.length > 2 && base[base.length - 1] === base[base.length - 2] &&
        !VOWELS.has(base[base.length - 1])) {
      return base.slice(0, -1); // stemming -> stem
    }
    if (needsFinalE(base)) return base + 'e';
    return base;
  }
  if (lower.endsWith('ied') && lower.length > 4) return lower.slice(0, -3) + 'y';
  if (lower.endsWith('ed') && lower.length > 3) {
    const base = lower.slice(0, -2);
    if (base.length > 2 && base[base.length - 1] === base[base.length - 2] &&
        !VOWELS.has(base[base.length - 1])) {
      return base.slice(0, -1); // stemmed -> stem
    }
    if (needsFinalE(base)) return base + 'e';
    return base;
  }
  if (lower.endsWith('ies') && lower.length > 4) return lower.slice(0, -3) + 'y';
  if (/(ss|x|z|ch|sh)es$/.test(lower)) return lower.slice(0, -2);
  if (lower.endsWith('s') && !lower.endsWith('ss') && lower.length > 3) return lower.slice(0, -1);
  return lower;
}

/** After stripping -ed/-ing, decide whether the base needs its silent e
 * back (induc -> induce, caus -> cause). */
function needsFinalE(base: string): boolean {
  return /(c|g|s|z|v|u|at|it|as|os|us|uc|ac|ic|oc|iv|rg|dg|im|in|ol|ur|er|ir|ag|eg|ot)$/.test(base) &&
    !/(ck|ng|ll|ss|w|x|y)$/.test(base) &&
    !/(een|oon|ain|own|awn)$/.test(base);
}

export function lemmatize(form: string, upos: string): string {
  const lower = form.toLowerCase();
  if (upos === 'PUNCT' || upos === 'NUM' || upos === 'SYM') return lower;
  if (EXCEPTIONS[lower]) return EXCEPTIONS[lower];
  if (KEEP_AS_IS.has(lower)) return lower;
  if (upos === 'VERB' || upos === 'AUX') return lemmatizeVerb(lower);
  if (upos === 'NOUN' || upos === 'PROPN') return stripPlural(lower);
  return lower;
}
