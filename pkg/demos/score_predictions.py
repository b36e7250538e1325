"""Score extracted triplets against gold predications.

Extracts from the bundled example, matches against the gold TSV by
content-word overlap, prints the precision/recall/F1 report, and shows
the strict/lenient aggregation used for manual 0/1/2 correctness scores.

    python demos/score_predictions.py
"""

from pathlib import Path

from causalext import (
    evaluate,
    extract_sentence,
    load_default_lexicon,
    load_default_rules,
    load_file,
    strict_lenient_precision,
    triplet_matches_gold,
)
from causalext.evaluate import load_gold_tsv

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def main():
    lexicon = load_default_lexicon()
    rules = load_default_rules()
    sent = next(load_file(FIXTURES / "calcitonin.conllu").sentences())
    triplets = extract_sentence(sent, lexicon, rules)
    gold = load_gold_tsv((FIXTURES / "calcitonin.gold.tsv").read_text(encoding="utf-8"))

    print("prediction:")
    for t in triplets:
        print(f"    cause={t.cause.text!r}")
        print(f"    trigger={t.trigger_text!r}")
        print(f"    effect={t.effect.text!r}")
    print("gold:")
    for g in gold:
        print(f"    <{g.subject_text} | {g.predicate} | {g.object_text}>")
    print()
    print("overlap match?", triplet_matches_gold(triplets[0], gold[0]))

    report = evaluate(triplets, gold)
    print(f"TP={report.tp} FP={report.fp} FN={report.fn} "
          f"P={report.precision:.4f} R={report.recall:.4f} F1={report.f1:.4f}")
    print()

    # manual 0/1/2 review scores aggregate two ways: strict counts only
    # fully-correct triplets, lenient gives half credit
    scores = [2, 2, 2, 2, 2, 2, 1, 1, 0, 0]
    strict, lenient = strict_lenient_precision(scores)
    print(f"review scores {scores}")
    print(f"strict precision  = {strict:.2f}")
    print(f"lenient precision = {lenient:.2f}")


if __name__ == "__main__":
    main()
