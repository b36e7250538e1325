export interface TokenRow {
  /** 1-based position within the sentence */
  id: number;
  form: string;
  lemma: string;
  upos: string;
  xpos: string;
  /** 1-based head id; 0 marks the root */
  head: number;
  deprel: string;
}

export interface Sentence {
  sentId: string;
  text: string;
  tokens: TokenRow[];
}

export interface Document {
  docId: string;
  sentences: Sentence[];
}

export const PARSER_ID = 'parse-adapter 0.1.0 (clearnlp)';
