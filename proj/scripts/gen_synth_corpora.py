#!/usr/bin/env python3
"""Regenerate tests/data/synth_{a,b}.jsonl.

Four-class corpora with disjoint per-class keyword vocabularies, linearly
separable by construction. Fixed seed; the files are checked in.
"""

import json
import random

VOCAB = {
    "confusion": ["wondering", "unsure", "unclear", "puzzled", "question",
                  "waiting", "why", "how", "confusing", "lost"],
    "encouragement": ["strong", "hope", "courage", "positive", "fight",
                      "support", "brave", "believe", "forward", "together"],
    "gratitude": ["thanks", "grateful", "appreciate", "kind", "wonderful",
                  "blessed", "thankful", "touched", "generous", "warm"],
    "facts": ["clinic", "appointment", "results", "schedule", "dosage",
              "procedure", "minutes", "referral", "opens", "records"],
}


def write_corpus(path, prefix, posts_per_class, seed):
    rng = random.Random(seed)
    rows = []
    counter = 1
    for label, words in VOCAB.items():
        for _ in range(posts_per_class):
            n = rng.randint(6, 12)
            text = " ".join(rng.choice(words) for _ in range(n)).capitalize() + "."
            rows.append({
                "id": "%s%d" % (prefix, counter),
                "author": "%s_u%d" % (prefix, rng.randint(1, 15)),
                "topic": "%s_t%d" % (prefix, rng.randint(1, 6)),
                "text": text,
                "label": label,
            })
            counter += 1
    with open(path, "w") as f:
        for row in rows:
            f.write(json.dumps(row) + "\n")
    print("%s: %d posts" % (path, len(rows)))


if __name__ == "__main__":
    write_corpus("tests/data/synth_a.jsonl", "sa", 12, 7)
    write_corpus("tests/data/synth_b.jsonl", "sb", 12, 11)
