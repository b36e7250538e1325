#!/usr/bin/env node
/**
 * parse-adapter --in DIR --out DIR [--fixtures]
 *
 * Converts raw text documents (*.txt, one document per file, or *.jsonl
 * with {id, title, abstract} records) into CoNLL-U files the extraction
 * engine ingests. --fixtures instead regenerates the curated regression
 * fixture files into --out.
 */

import * as fs from 'fs';
import * as path from 'path';

import { renderDocument, validateConllu } from './conllu';
import { FIXTURE_DOCUMENTS } from './fixtures';
import { parseDocument, recordToDocument } from './pipeline';
import { Document } from './types';

interface Args {
  inDir?: string;
  outDir?: string;
  fixtures: boolean;
}

export function parseArgs(argv: string[]): Args {
  const args: Args = { fixtures: false };
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === '--in') args.inDir = argv[++i];
    else if (a === '--out') args.outDir = argv[++i];
    else if (a === '--fixtures') args.fixtures = true;
    else if (a === '--help' || a === '-h') {
      process.stdout.write('usage: parse-adapter --in DIR --out DIR [--fixtures]\n');
      process.exit(0);
    } else throw new Error(`unknown argument: ${a}`);
  }
  return args;
}

function writeDocument(outDir: string, doc: Document): string {
  const text = renderDocument(doc);
  validateConllu(text);
  const target = path.join(outDir, `${doc.docId}.conllu`);
  const tmp = target + '.tmp';
  fs.writeFileSync(tmp, text, 'utf-8');
  fs.renameSync(tmp, target);
  return target;
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (e) {
    process.stderr.write(`parse-adapter: ${(e as Error).message}\n`);
    return 2;
  }
  if (!args.outDir) {
    process.stderr.write('parse-adapter: --out DIR is required\n');
    return 2;
  }
  fs.mkdirSync(args.outDir, { recursive: true });

  if (args.fixtures) {
    for (const doc of FIXTURE_DOCUMENTS) {
      const target = writeDocument(args.outDir, doc);
      process.stderr.write(`wrote ${target} (${doc.sentences.length} sentences)\n`);
    }
    return 0;
  }

  if (!args.inDir) {
    process.stderr.write('parse-adapter: --in DIR is required (or pass --fixtures)\n');
    return 2;
  }
  if (!fs.existsSync(args.inDir)) {
    process.stderr.write(`parse-adapter: no such directory: ${args.inDir}\n`);
    return 2;
  }
  const entries = fs.readdirSync(args.inDir).sort();
  let wrote = 0;
  for (const name of entries) {
    const full = path.join(args.inDir, name);
    if (name.endsWith('.txt')) {
      const text = fs.readFileSync(full, 'utf-8');
      const doc = parseDocument(path.basename(name, '.txt'), text);
      if (doc.sentences.length === 0) {
        process.stderr.write(`skipping ${name}: no sentences\n`);
        continue;
      }
      writeDocument(args.outDir, doc);
      wrote++;
    } else if (name.endsWith('.jsonl')) {
      const lines = fs.readFileSync(full, 'utf-8').split('\n');
      for (const line of lines) {
        if (!line.trim()) continue;
        const rec = JSON.parse(line);
        if (!rec.id) {
          process.stderr.write(`parse-adapter: record without id in ${name}\n`);
          return 2;
        }
        const doc = recordToDocument(rec);
        if (doc.sentences.length === 0) continue;
        writeDocument(args.outDir, doc);
        wrote++;
      }
    }
  }
  process.stderr.write(`parse-adapter: wrote ${wrote} document(s) to ${args.outDir}\n`);
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
