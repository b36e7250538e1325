"""Command-line entry point.

Subcommands:
  extract     CoNLL-U in, JSONL triplets out (+ coverage sidecar)
  evaluate    predictions JSONL vs gold TSV, prints P/R/F1
  rule-stats  per-rule coverage from extract sidecars

All configuration is flags plus an optional JSON config file; no
environment variables, so corpus runs are reproducible from the command
line alone.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import default_lexicon_path, default_rules_path
from .conllu import ConlluError, Corpus, load_file
from .evaluate import (
    CAUSAL_PREDICATES,
    evaluate as evaluate_predictions,
    load_gold_tsv,
    load_predictions_jsonl,
)
from .extract import DEFAULT_EXCLUDED_DEPS, DEFAULT_UNCERTAINTY_WORDS, ExpansionConfig, extract_corpus, triplets_to_jsonl
from .lexicon import LexiconError, load_lexicon_file
from .rules import RuleError, load_rules_file, rule_coverage_report


def _comma_set(value):
    return frozenset(x.strip() for x in value.split(",") if x.strip())


def build_parser():
    p = argparse.ArgumentParser(prog="causalext", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file with defaults for any flag")
    sub = p.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("extract", help="extract cause-effect triplets from CoNLL-U input")
    ex.add_argument("--lexicon", help="trigger lexicon TSV (default: packaged)")
    ex.add_argument("--rules", help="decision-list rule file (default: packaged)")
    ex.add_argument("--input", action="append", default=None, help="CoNLL-U file (repeatable)")
    ex.add_argument("--output", help="JSONL output path (default: stdout)")
    ex.add_argument("--exclude-deps", help="comma list of deps pruned from phrases")
    ex.add_argument("--uncertainty-words", help="comma list of aux words treated as uncertainty")
    ex.add_argument("--strict", action="store_true", help="treat malformed sentences as errors")
    ex.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    ev = sub.add_parser("evaluate", help="score predictions against a gold TSV")
    ev.add_argument("--predictions", required=True, help="JSONL from the extract subcommand")
    ev.add_argument("--gold", required=True, help="gold TSV: sent_id, predicate, subject, object")
    ev.add_argument("--predicates", help="comma list of causal predicate names")
    ev.add_argument("--json", action="store_true", help="print the JSON report only")

    rs = sub.add_parser("rule-stats", help="print per-rule coverage from extract sidecars")
    rs.add_argument("--rules", help="decision-list rule file (default: packaged)")
    rs.add_argument("--merge", action="store_true", help="sum counts across several sidecars")
    rs.add_argument("sidecars", nargs="+", help="coverage sidecar JSON path(s)")
    return p


def _apply_config(args, parser):
    if not args.config:
        return args
    with open(args.config, encoding="utf-8") as f:
        conf = json.load(f)
    for key, value in conf.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            parser.error(f"config key {key!r} is not a known option")
        if getattr(args, attr) in (None, False):
            setattr(args, attr, value)
    return args


def cmd_extract(args):
    lexicon_path = args.lexicon or default_lexicon_path()
    rules_path = args.rules or default_rules_path()
    try:
        lexicon = load_lexicon_file(lexicon_path)
        rules = load_rules_file(rules_path)
    except FileNotFoundError as e:
        print(f"causalext: cannot read {e.filename}", file=sys.stderr)
        return 2
    except (LexiconError, RuleError) as e:
        print(f"causalext: {e}", file=sys.stderr)
        return 2

    cfg_kwargs = {}
    if args.exclude_deps is not None:
        cfg_kwargs["excluded_deps"] = _comma_set(args.exclude_deps)
    if args.uncertainty_words is not None:
        cfg_kwargs["uncertainty_words"] = _comma_set(args.uncertainty_words)
    cfg = ExpansionConfig(**cfg_kwargs)

    corpus = Corpus()
    for path in args.input or []:
        try:
            part = load_file(path, strict=args.strict)
        except FileNotFoundError:
            print(f"causalext: cannot read {path}", file=sys.stderr)
            return 2
        except ConlluError as e:
            print(f"causalext: {path}: {e}", file=sys.stderr)
            return 2
        corpus.documents.extend(part.documents)

    result = extract_corpus(corpus, lexicon, rules, cfg, jobs=args.jobs)
    payload = triplets_to_jsonl(result.triplets)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(payload)
        sidecar = args.output + ".coverage.json"
        with open(sidecar, "w", encoding="utf-8") as f:
            json.dump({"counts": dict(sorted(result.counters.items()))}, f, indent=2, sort_keys=True)
            f.write("\n")
    else:
        sys.stdout.write(payload)

    print(
        f"sentences={result.sentences} triggers={result.triggers} triplets={len(result.triplets)}",
        file=sys.stderr,
    )
    for row in rule_coverage_report(rules):
        if row.count:
            print(f"  {row.rule_id}\t{row.label}\t{row.count}\t{row.fraction:.1%}", file=sys.stderr)
    return 0


def cmd_evaluate(args):
    try:
        with open(args.predictions, encoding="utf-8") as f:
            predicted = load_predictions_jsonl(f)
        with open(args.gold, encoding="utf-8") as f:
            gold = load_gold_tsv(f)
    except FileNotFoundError as e:
        print(f"causalext: cannot read {e.filename}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"causalext: {e}", file=sys.stderr)
        return 2

    predicates = _comma_set(args.predicates) if args.predicates else CAUSAL_PREDICATES
    predicates = frozenset(p.upper() for p in predicates)
    report = evaluate_predictions(predicted, gold, predicates)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        print(f"TP={report.tp} FP={report.fp} FN={report.fn}")
        print(f"P={report.precision:.4f}, R={report.recall:.4f}, F1={report.f1:.4f}")
        if report.degenerate:
            print("note: one or more ratios had a zero denominator and were reported as 0")
    return 0


def cmd_rule_stats(args):
    rules_path = args.rules or default_rules_path()
    try:
        rules = load_rules_file(rules_path)
    except FileNotFoundError as e:
        print(f"causalext: cannot read {e.filename}", file=sys.stderr)
        return 2
    if len(args.sidecars) > 1 and not args.merge:
        print("causalext: several sidecars given; pass --merge to sum them", file=sys.stderr)
        return 2
    for path in args.sidecars:
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError:
            print(f"causalext: cannot read {path}", file=sys.stderr)
            return 2
        rules.merge_counters(data.get("counts", {}))
    print("rule\tlabel\tcount\tshare")
    for row in rule_coverage_report(rules):
        print(f"{row.rule_id}\t{row.label}\t{row.count}\t{row.fraction:.1%}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args = _apply_config(args, parser)
    handlers = {"extract": cmd_extract, "evaluate": cmd_evaluate, "rule-stats": cmd_rule_stats}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
