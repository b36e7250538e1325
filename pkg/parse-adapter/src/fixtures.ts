/**
 * Curated parses for the bundled regression sentences. These rows are
 * maintained by hand (attachments corrected where the heuristic parser
 * deviates from the analyses the downstream rule set expects) and are
 * the source of truth for the consumer's checked-in fixture files.
 */

import { Document } from './types';

type Row = [number, string, string, string, string, number, string];

function rows(data: Row[]) {
  return data.map(([id, form, lemma, upos, xpos, head, deprel]) => ({
    id, form, lemma, upos, xpos, head, deprel,
  }));
}

export const FIXTURE_DOCUMENTS: Document[] = [
  {
    docId: 'stlv_lines',
    sentences: [
      {
        sentId: 'stlv_lines-s1',
        text: 'Three long-term T-cell lines, established from peripheral blood mononuclear cell cultures from three STLV-1-seropositive monkeys, produced HTLV-1 Gag and Env antigens and retroviral particles.',
        tokens: rows([
          [1, 'Three', 'three', 'NUM', 'CD', 4, 'nummod'],
          [2, 'long-term', 'long-term', 'ADJ', 'JJ', 4, 'amod'],
          [3, 'T-cell', 't-cell', 'NOUN', 'NN', 4, 'compound'],
          [4, 'lines', 'line', 'NOUN', 'NNS', 18, 'nsubj'],
          [5, ',', ',', 'PUNCT', ',', 4, 'punct'],
          [6, 'established', 'establish', 'VERB', 'VBN', 4, 'acl'],
          [7, 'from', 'from', 'ADP', 'IN', 6, 'prep'],
          [8, 'peripheral', 'peripheral', 'ADJ', 'JJ', 12, 'amod'],
          [9, 'blood', 'blood', 'NOUN', 'NN', 12, 'compound'],
          [10, 'mononuclear', 'mononuclear', 'ADJ', 'JJ', 12, 'amod'],
          [11, 'cell', 'cell', 'NOUN', 'NN', 12, 'compound'],
          [12, 'cultures', 'culture', 'NOUN', 'NNS', 7, 'pobj'],
          [13, 'from', 'from', 'ADP', 'IN', 12, 'prep'],
          [14, 'three', 'three', 'NUM', 'CD', 16, 'nummod'],
          [15, 'STLV-1-seropositive', 'stlv-1-seropositive', 'ADJ', 'JJ', 16, 'amod'],
          [16, 'monkeys', 'monkey', 'NOUN', 'NNS', 13, 'pobj'],
          [17, ',', ',', 'PUNCT', ',', 4, 'punct'],
          [18, 'produced', 'produce', 'VERB', 'VBD', 0, 'root'],
          [19, 'HTLV-1', 'htlv-1', 'PROPN', 'NNP', 23, 'compound'],
          [20, 'Gag', 'gag', 'PROPN', 'NNP', 23, 'compound'],
          [21, 'and', 'and', 'CCONJ', 'CC', 20, 'cc'],
          [22, 'Env', 'env', 'PROPN', 'NNP', 20, 'conj'],
          [23, 'antigens', 'antigen', 'NOUN', 'NNS', 18, 'dobj'],
          [24, 'and', 'and', 'CCONJ', 'CC', 23, 'cc'],
          [25, 'retroviral', 'retroviral', 'ADJ', 'JJ', 26, 'amod'],
          [26, 'particles', 'particle', 'NOUN', 'NNS', 23, 'conj'],
          [27, '.', '.', 'PUNCT', '.', 18, 'punct'],
        ]),
      },
    ],
  },
  {
    docId: 'pedv',
    sentences: [
      {
        sentId: 'pedv-s1',
        text: 'PEDV belongs to the Alphacoronavirus genus and can cause a highly contagious enteric disease.',
        tokens: rows([
          [1, 'PEDV', 'pedv', 'PROPN', 'NNP', 9, 'nsubj'],
          [2, 'belongs', 'belong', 'VERB', 'VBZ', 0, 'root'],
          [3, 'to', 'to', 'ADP', 'IN', 2, 'prep'],
          [4, 'the', 'the', 'DET', 'DT', 6, 'det'],
          [5, 'Alphacoronavirus', 'alphacoronavirus', 'PROPN', 'NNP', 6, 'compound'],
          [6, 'genus', 'genus', 'NOUN', 'NN', 3, 'pobj'],
          [7, 'and', 'and', 'CCONJ', 'CC', 2, 'cc'],
          [8, 'can', 'can', 'VERB', 'MD', 9, 'aux'],
          [9, 'cause', 'cause', 'VERB', 'VB', 2, 'conj'],
          [10, 'a', 'a', 'DET', 'DT', 14, 'det'],
          [11, 'highly', 'highly', 'ADV', 'RB', 12, 'advmod'],
          [12, 'contagious', 'contagious', 'ADJ', 'JJ', 14, 'amod'],
          [13, 'enteric', 'enteric', 'ADJ', 'JJ', 14, 'amod'],
          [14, 'disease', 'disease', 'NOUN', 'NN', 9, 'dobj'],
          [15, '.', '.', 'PUNCT', '.', 2, 'punct'],
        ]),
      },
    ],
  },
  {
    docId: 'mmulv',
    sentences: [
      {
        sentId: 'mmulv-s1',
        text: 'MMuLV infection of non-transgenic mice induced primarily mature T cell lymphomas.',
        tokens: rows([
          [1, 'MMuLV', 'mmulv', 'PROPN', 'NNP', 2, 'compound'],
          [2, 'infection', 'infection', 'NOUN', 'NN', 6, 'nsubj'],
          [3, 'of', 'of', 'ADP', 'IN', 2, 'prep'],
          [4, 'non-transgenic', 'non-transgenic', 'ADJ', 'JJ', 5, 'amod'],
          [5, 'mice', 'mouse', 'NOUN', 'NNS', 3, 'pobj'],
          [6, 'induced', 'induce', 'VERB', 'VBD', 0, 'root'],
          [7, 'primarily', 'primarily', 'ADV', 'RB', 8, 'advmod'],
          [8, 'mature', 'mature', 'ADJ', 'JJ', 11, 'amod'],
          [9, 'T', 't', 'NOUN', 'NN', 10, 'compound'],
          [10, 'cell', 'cell', 'NOUN', 'NN', 11, 'compound'],
          [11, 'lymphomas', 'lymphoma', 'NOUN', 'NNS', 6, 'dobj'],
          [12, '.', '.', 'PUNCT', '.', 6, 'punct'],
        ]),
      },
    ],
  },
  {
    docId: 'safrole_negation',
    sentences: [
      {
        sentId: 'safrole_negation-s1',
        text: 'Overnight incubation with 1 microM safrole did not alter cell proliferation.',
        tokens: rows([
          [1, 'Overnight', 'overnight', 'ADJ', 'JJ', 2, 'amod'],
          [2, 'incubation', 'incubation', 'NOUN', 'NN', 9, 'nsubj'],
          [3, 'with', 'with', 'ADP', 'IN', 2, 'prep'],
          [4, '1', '1', 'NUM', 'CD', 6, 'nummod'],
          [5, 'microM', 'microm', 'NOUN', 'NN', 6, 'compound'],
          [6, 'safrole', 'safrole', 'NOUN', 'NN', 3, 'pobj'],
          [7, 'did', 'do', 'VERB', 'VBD', 9, 'aux'],
          [8, 'not', 'not', 'PART', 'RB', 9, 'neg'],
          [9, 'alter', 'alter', 'VERB', 'VB', 0, 'root'],
          [10, 'cell', 'cell', 'NOUN', 'NN', 11, 'compound'],
          [11, 'proliferation', 'proliferation', 'NOUN', 'NN', 9, 'dobj'],
          [12, '.', '.', 'PUNCT', '.', 9, 'punct'],
        ]),
      },
    ],
  },
  {
    docId: 'glucocorticoids_uncertainty',
    sentences: [
      {
        sentId: 'glucocorticoids_uncertainty-s1',
        text: 'Glucocorticoids might induce the apoptosis of some types of AML cells, just like that of some lymphoid leukemia cells.',
        tokens: rows([
          [1, 'Glucocorticoids', 'glucocorticoid', 'NOUN', 'NNS', 3, 'nsubj'],
          [2, 'might', 'might', 'VERB', 'MD', 3, 'aux'],
          [3, 'induce', 'induce', 'VERB', 'VB', 0, 'root'],
          [4, 'the', 'the', 'DET', 'DT', 5, 'det'],
          [5, 'apoptosis', 'apoptosis', 'NOUN', 'NN', 3, 'dobj'],
          [6, 'of', 'of', 'ADP', 'IN', 5, 'prep'],
          [7, 'some', 'some', 'DET', 'DT', 8, 'det'],
          [8, 'types', 'type', 'NOUN', 'NNS', 6, 'pobj'],
          [9, 'of', 'of', 'ADP', 'IN', 8, 'prep'],
          [10, 'AML', 'aml', 'PROPN', 'NNP', 11, 'compound'],
          [11, 'cells', 'cell', 'NOUN', 'NNS', 9, 'pobj'],
          [12, ',', ',', 'PUNCT', ',', 3, 'punct'],
          [13, 'just', 'just', 'ADV', 'RB', 14, 'advmod'],
          [14, 'like', 'like', 'ADP', 'IN', 3, 'prep'],
          [15, 'that', 'that', 'DET', 'DT', 14, 'pobj'],
          [16, 'of', 'of', 'ADP', 'IN', 15, 'prep'],
          [17, 'some', 'some', 'DET', 'DT', 20, 'det'],
          [18, 'lymphoid', 'lymphoid', 'ADJ', 'JJ', 20, 'amod'],
          [19, 'leukemia', 'leukemia', 'NOUN', 'NN', 20, 'compound'],
          [20, 'cells', 'cell', 'NOUN', 'NNS', 16, 'pobj'],
          [21, '.', '.', 'PUNCT', '.', 3, 'punct'],
        ]),
      },
    ],
  },
  {
    docId: 'headword_samples',
    sentences: [
      {
        sentId: 'headword_samples-s1',
        text: 'In particular, we reported the existence of BCR-ABL alternative splicing isoforms, in about 80% of Philadelphia-positive patients, which lead to the expression of aberrant proteins.',
        tokens: rows([
          [1, 'In', 'in', 'ADP', 'IN', 5, 'prep'],
          [2, 'particular', 'particular', 'ADJ', 'JJ', 1, 'pobj'],
          [3, ',', ',', 'PUNCT', ',', 5, 'punct'],
          [4, 'we', 'we', 'PRON', 'PRP', 5, 'nsubj'],
          [5, 'reported', 'report', 'VERB', 'VBD', 0, 'root'],
          [6, 'the', 'the', 'DET', 'DT', 7, 'det'],
          [7, 'existence', 'existence', 'NOUN', 'NN', 5, 'dobj'],
          [8, 'of', 'of', 'ADP', 'IN', 7, 'prep'],
          [9, 'BCR-ABL', 'bcr-abl', 'PROPN', 'NNP', 12, 'compound'],
          [10, 'alternative', 'alternative', 'ADJ', 'JJ', 11, 'amod'],
          [11, 'splicing', 'splicing', 'NOUN', 'NN', 12, 'compound'],
          [12, 'isoforms', 'isoform', 'NOUN', 'NNS', 8, 'pobj'],
          [13, ',', ',', 'PUNCT', ',', 12, 'punct'],
          [14, 'in', 'in', 'ADP', 'IN', 12, 'prep'],
          [15, 'about', 'about', 'ADV', 'RB', 16, 'advmod'],
          [16, '80', '80', 'NUM', 'CD', 17, 'nummod'],
          [17, '%', '%', 'NOUN', 'NN', 14, 'pobj'],
          [18, 'of', 'of', 'ADP', 'IN', 17, 'prep'],
          [19, 'Philadelphia-positive', 'philadelphia-positive', 'ADJ', 'JJ', 20, 'amod'],
          [20, 'patients', 'patient', 'NOUN', 'NNS', 18, 'pobj'],
          [21, ',', ',', 'PUNCT', ',', 20, 'punct'],
          [22, 'which', 'which', 'PRON', 'WDT', 23, 'nsubj'],
          [23, 'lead', 'lead', 'VERB', 'VBP', 20, 'relcl'],
          [24, 'to', 'to', 'ADP', 'IN', 23, 'prep'],
          [25, 'the', 'the', 'DET', 'DT', 26, 'det'],
          [26, 'expression', 'expression', 'NOUN', 'NN', 24, 'pobj'],
          [27, 'of', 'of', 'ADP', 'IN', 26, 'prep'],
          [28, 'aberrant', 'aberrant', 'ADJ', 'JJ', 29, 'amod'],
          [29, 'proteins', 'protein', 'NOUN', 'NNS', 27, 'pobj'],
          [30, '.', '.', 'PUNCT', '.', 5, 'punct'],
        ]),
      },
      {
        sentId: 'headword_samples-s2',
        text: 'Childhood acute myeloid leukemia with bone marrow eosinophilia caused by t(16 ; 21)(q24 ; q22).',
        tokens: rows([
          [1, 'Childhood', 'childhood', 'NOUN', 'NN', 4, 'compound'],
          [2, 'acute', 'acute', 'ADJ', 'JJ', 4, 'amod'],
          [3, 'myeloid', 'myeloid', 'ADJ', 'JJ', 4, 'amod'],
          [4, 'leukemia', 'leukemia', 'NOUN', 'NN', 0, 'root'],
          [5, 'with', 'with', 'ADP', 'IN', 4, 'prep'],
          [6, 'bone', 'bone', 'NOUN', 'NN', 8, 'compound'],
          [7, 'marrow', 'marrow', 'NOUN', 'NN', 8, 'compound'],
          [8, 'eosinophilia', 'eosinophilia', 'NOUN', 'NN', 5, 'pobj'],
          [9, 'caused', 'cause', 'VERB', 'VBN', 4, 'acl'],
          [10, 'by', 'by', 'ADP', 'IN', 9, 'agent'],
          [11, 't(16', 't(16', 'NOUN', 'NN', 10, 'pobj'],
          [12, ';', ';', 'PUNCT', ':', 11, 'punct'],
          [13, '21)(q24', '21)(q24', 'NOUN', 'NN', 11, 'appos'],
          [14, ';', ';', 'PUNCT', ':', 13, 'punct'],
          [15, 'q22)', 'q22)', 'NOUN', 'NN', 13, 'appos'],
          [16, '.', '.', 'PUNCT', '.', 4, 'punct'],
        ]),
      },
      {
        sentId: 'headword_samples-s3',
        text: 'Perifosine and TRAIL synergized to activate caspase-8 and induce apoptosis, which was blocked by a caspase-8-selective inhibitor.',
        tokens: rows([
          [1, 'Perifosine', 'perifosine', 'PROPN', 'NNP', 4, 'nsubj'],
          [2, 'and', 'and', 'CCONJ', 'CC', 1, 'cc'],
          [3, 'TRAIL', 'trail', 'PROPN', 'NNP', 1, 'conj'],
          [4, 'synergized', 'synergize', 'VERB', 'VBD', 0, 'root'],
          [5, 'to', 'to', 'PART', 'TO', 6, 'aux'],
          [6, 'activate', 'activate', 'VERB', 'VB', 4, 'xcomp'],
          [7, 'caspase-8', 'caspase-8', 'NOUN', 'NN', 6, 'dobj'],
          [8, 'and', 'and', 'CCONJ', 'CC', 6, 'cc'],
          [9, 'induce', 'induce', 'VERB', 'VB', 6, 'conj'],
          [10, 'apoptosis', 'apoptosis', 'NOUN', 'NN', 9, 'dobj'],
          [11, ',', ',', 'PUNCT', ',', 10, 'punct'],
          [12, 'which', 'which', 'PRON', 'WDT', 14, 'nsubjpass'],
          [13, 'was', 'be', 'AUX', 'VBD', 14, 'auxpass'],
          [14, 'blocked', 'block', 'VERB', 'VBN', 10, 'relcl'],
          [15, 'by', 'by', 'ADP', 'IN', 14, 'agent'],
          [16, 'a', 'a', 'DET', 'DT', 18, 'det'],
          [17, 'caspase-8-selective', 'caspase-8-selective', 'ADJ', 'JJ', 18, 'amod'],
          [18, 'inhibitor', 'inhibitor', 'NOUN', 'NN', 15, 'pobj'],
          [19, '.', '.', 'PUNCT', '.', 4, 'punct'],
        ]),
      },
      {
        sentId: 'headword_samples-s4',
        text: 'Monocytic maturation ( morphologic and immunologic ) was induced in all cases studied , although to different rates, by TNF-alpha and by HTR-9 incubation.',
        tokens: rows([
          [1, 'Monocytic', 'monocytic', 'ADJ', 'JJ', 2, 'amod'],
          [2, 'maturation', 'maturation', 'NOUN', 'NN', 9, 'nsubjpass'],
          [3, '(', '(', 'PUNCT', '-LRB-', 2, 'punct'],
          [4, 'morphologic', 'morphologic', 'ADJ', 'JJ', 2, 'appos'],
          [5, 'and', 'and', 'CCONJ', 'CC', 4, 'cc'],
          [6, 'immunologic', 'immunologic', 'ADJ', 'JJ', 4, 'conj'],
          [7, ')', ')', 'PUNCT', '-RRB-', 2, 'punct'],
          [8, 'was', 'be', 'AUX', 'VBD', 9, 'auxpass'],
          [9, 'induced', 'induce', 'VERB', 'VBN', 0, 'root'],
          [10, 'in', 'in', 'ADP', 'IN', 9, 'prep'],
          [11, 'all', 'all', 'DET', 'DT', 12, 'det'],
          [12, 'cases', 'case', 'NOUN', 'NNS', 10, 'pobj'],
          [13, 'studied', 'study', 'VERB', 'VBN', 12, 'acl'],
          [14, ',', ',', 'PUNCT', ',', 9, 'punct'],
          [15, 'although', 'although', 'SCONJ', 'IN', 9, 'mark'],
          [16, 'to', 'to', 'ADP', 'IN', 9, 'prep'],
          [17, 'different', 'different', 'ADJ', 'JJ', 18, 'amod'],
          [18, 'rates', 'rate', 'NOUN', 'NNS', 16, 'pobj'],
          [19, ',', ',', 'PUNCT', ',', 9, 'punct'],
          [20, 'by', 'by', 'ADP', 'IN', 9, 'agent'],
          [21, 'TNF-alpha', 'tnf-alpha', 'PROPN', 'NNP', 20, 'pobj'],
          [22, 'and', 'and', 'CCONJ', 'CC', 20, 'cc'],
          [23, 'by', 'by', 'ADP', 'IN', 20, 'conj'],
          [24, 'HTR-9', 'htr-9', 'PROPN', 'NNP', 25, 'compound'],
          [25, 'incubation', 'incubation', 'NOUN', 'NN', 23, 'pobj'],
          [26, '.', '.', 'PUNCT', '.', 9, 'punct'],
        ]),
      },
    ],
  },
  {
    docId: 'calcitonin',
    sentences: [
      {
        sentId: 'calcitonin-s1',
        text: 'Calcitonin gene-related peptide inhibits interleukin-1beta-induced endogenous monocyte chemoattractant protein-1 secretion in type II alveolar epithelial cells.',
        tokens: rows([
          [1, 'Calcitonin', 'calcitonin', 'PROPN', 'NNP', 3, 'compound'],
          [2, 'gene-related', 'gene-related', 'ADJ', 'JJ', 3, 'amod'],
          [3, 'peptide', 'peptide', 'NOUN', 'NN', 4, 'nsubj'],
          [4, 'inhibits', 'inhibit', 'VERB', 'VBZ', 0, 'root'],
          [5, 'interleukin-1beta-induced', 'interleukin-1beta-induced', 'ADJ', 'JJ', 10, 'amod'],
          [6, 'endogenous', 'endogenous', 'ADJ', 'JJ', 10, 'amod'],
          [7, 'monocyte', 'monocyte', 'NOUN', 'NN', 10, 'compound'],
          [8, 'chemoattractant', 'chemoattractant', 'NOUN', 'NN', 10, 'compound'],
          [9, 'protein-1', 'protein-1', 'NOUN', 'NN', 10, 'compound'],
          [10, 'secretion', 'secretion', 'NOUN', 'NN', 4, 'dobj'],
          [11, 'in', 'in', 'ADP', 'IN', 10, 'prep'],
          [12, 'type', 'type', 'NOUN', 'NN', 16, 'compound'],
          [13, 'II', 'ii', 'NUM', 'CD', 16, 'nummod'],
          [14, 'alveolar', 'alveolar', 'ADJ', 'JJ', 16, 'amod'],
          [15, 'epithelial', 'epithelial', 'ADJ', 'JJ', 16, 'amod'],
          [16, 'cells', 'cell', 'NOUN', 'NNS', 11, 'pobj'],
          [17, '.', '.', 'PUNCT', '.', 4, 'punct'],
        ]),
      },
    ],
  },
];
