/**
 * Sentence splitting and tokenization for biomedical abstract text.
 *
 * Both stages are intentionally conservative: hyphens, slashes and
 * internal parentheses stay inside tokens (gene and karyotype names like
 * "BCR-ABL" or "t(16" must survive), and only sentence-final punctuation
 * followed by a capitalized continuation ends a sentence.
 */

const ABBREVIATIONS = new Set([
  'e.g', 'i.e', 'et al', 'etc', 'vs', 'fig', 'figs', 'ref', 'refs',
  'dr', 'mr', 'mrs', 'st', 'no', 'approx', 'ca', 'cf',
]);

export function splitSentences(text: string): string[] {
  const out: string[] = [];
  let current = '';
  const flat = text.replace(/\s+/g, ' ').trim();
  for (let i = 0; i < flat.length; i++) {
    const ch = flat[i];
    current += ch;
    if (ch === '.' || ch === '!' || ch === '?') {
      const rest = flat.slice(i + 1);
      const continuation = /^\s+[A-Z0-9("']/.test(rest);
      const tail = current.slice(0, -1).split(/\s+/).pop() ?? '';
      const abbrev = ABBREVIATIONS.has(tail.toLowerCase().replace(/\.$/, ''));
      const insideNumber = /\d$/.test(tail) && /^\d/.test(rest);
      if ((continuation || rest === '') && !abbrev && !insideNumber) {
        out.push(current.trim());
        current = '';
      }
    }
  }
  if (current.trim()) out.push(current.trim());
  return out;
}

const LEADING = /^[("'\[]+/;
const TRAILING = /[,;:!?.)"'\]]+$/;

/** Split one trailing/leading punctuation cluster off a whitespace chunk,
 * keeping internal characters untouched. A closing parenthesis stays in
 * the token when the token also opened one ("t(16"-style names). */
function splitChunk(chunk: string): string[] {
  const out: string[] = [];
  let body = chunk;
  const lead = body.match(LEADING)?.[0] ?? '';
  if (lead && lead.length < body.length) {
    for (const c of lead) out.push(c);
    body = body.slice(lead.length);
  }
  const tailParts: string[] = [];
  for (;;) {
    const tail = body.match(TRAILING)?.[0] ?? '';
    if (!tail || tail.length >= body.length) break;
    const last = body[body.length - 1];
    if (last === ')' && (body.match(/\(/g)?.length ?? 0) >= (body.match(/\)/g)?.length ?? 0)) {
      break; // balanced or opening-heavy: ")" belongs to the token
    }
    tailParts.unshift(last);
    body = body.slice(0, -1);
  }
  if (body) out.push(body);
  out.push(...tailParts);
  return out;
}

export function tokenize(sentence: string): string[] {
  const tokens: string[] = [];
  for (const chunk of sentence.split(/\s+/)) {
    if (!chunk) continue;
    tokens.push(...splitChunk(chunk));
  }
  return tokens;
}
