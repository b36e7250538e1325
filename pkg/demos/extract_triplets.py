"""Walk the extraction pipeline over the bundled example parses.

For every sentence: show the triggers the lexicon finds, then the
cause-effect triplets the decision list assembles, with rule
attributions and any negation/uncertainty arguments.

Run from the repository root after `pip install -e .`:

    python demos/extract_triplets.py
"""

from pathlib import Path

from causalext import (
    extract_sentence,
    find_triggers,
    load_default_lexicon,
    load_default_rules,
    load_file,
)

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def main():
    lexicon = load_default_lexicon()
    rules = load_default_rules()

    for path in sorted(FIXTURES.glob("*.conllu")):
        corpus = load_file(path)
        for sent in corpus.sentences():
            print(f"--- {sent.sent_id}")
            print(f"    {sent.raw_text}")
            triggers = find_triggers(sent, lexicon)
            names = [f"{sent.tokens[t.anchor].text} ({t.entry.canonical})" for t in triggers]
            print(f"    triggers: {', '.join(names) if names else 'none'}")
            for t in extract_sentence(sent, lexicon, rules):
                neg = f" NOT[{t.negation[1]}]" if t.negation else ""
                unc = f" MAYBE[{t.uncertainty[1]}]" if t.uncertainty else ""
                print(
                    f"    [{t.cause_rule_id}/{t.effect_rule_id}]{neg}{unc} "
                    f"cause={t.cause.text!r} trigger={t.trigger_text!r} effect={t.effect.text!r}"
                )
            print()

    print("rule usage over this tiny corpus:")
    from causalext import rule_coverage_report

    for row in rule_coverage_report(rules):
        if row.count:
            print(f"    {row.rule_id:>4} {row.label:<6} fired {row.count}x ({row.fraction:.0%} of its label)")


if __name__ == "__main__":
    main()
