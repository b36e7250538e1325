"""Peek inside the feature grammar and the decision list.

Takes one example sentence, lists the candidate cause/effect headwords,
and for each (trigger, headword) pair prints the generated feature
strings and the first rule of the decision list that matches.

    python demos/inspect_features.py
"""

from pathlib import Path

from causalext import (
    candidate_headwords,
    find_triggers,
    generate_features,
    load_default_lexicon,
    load_default_rules,
    load_file,
)

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def main():
    lexicon = load_default_lexicon()
    rules = load_default_rules()
    sent = next(load_file(FIXTURES / "pedv.conllu").sentences())

    print(sent.raw_text)
    print()
    trigger = find_triggers(sent, lexicon)[0]
    v = trigger.anchor
    print(f"trigger: {sent.tokens[v].text!r} (entry {trigger.entry.canonical!r})")
    heads = sorted(candidate_headwords(sent))
    print(f"candidate headwords: {[sent.tokens[i].text for i in heads]}")
    print()

    for u in heads:
        if u == v:
            continue
        fs = generate_features(sent, v, u)
        verdict = rules.classify(fs)
        print(f"pair (v={sent.tokens[v].text}, u={sent.tokens[u].text}) -> {verdict.label}"
              + (f" via {verdict.rule_id}" if verdict.rule_id else ""))
        for f in sorted(fs.features):
            print(f"      {f}")
        print()


if __name__ == "__main__":
    main()
