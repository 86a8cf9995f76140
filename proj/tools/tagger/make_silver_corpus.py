#!/usr/bin/env python3
"""Build a silver-tagged English corpus for training the perceptron tagger.

Sentences come from WordNet gloss definitions and usage examples (the
WordNet 3.0 data files shipped inside the pattern3 source distribution).
Tags come from the lexicon+context-rule tagger bundled with TextBlob
(BSD-licensed Pattern resources, Brill lexicon), so no network access or
licensed treebank is needed.

Sentences are tokenized by the library itself (`train_tagger tokenize`)
so the training tokens have exactly the boundaries seen at tagging time.

Output: one `word<TAB>tag` line per token, a blank line between sentences.

    python3 make_silver_corpus.py --wordnet-dir .../wordnet/dict \
        --tokenizer build/tools/train_tagger --verb-index data/lemma/index.tsv \
        --out silver.tsv --max-sentences 60000 --seed 7
"""

import argparse
import pathlib
import random
import subprocess

from textblob.en import tag as pattern_tag

def load_verbs(path):
    verbs = set()
    with open(path, encoding="utf-8") as f:
        for line in f:
            parts = line.rstrip("\n").split("\t")
            if len(parts) == 2 and parts[0] == "verb":
                verbs.add(parts[1])
    return verbs


def repair(tagged, verbs):
    """The lexicon tagger leaves many base verbs as NN after a modal or "to"
    ("shall list", "to print the"). Retag those when the word is a known
    verb; after "to" only when a determiner or pronoun follows."""
    out = list(tagged)
    for i, (word, tag) in enumerate(out):
        if tag not in ("NN", "VBP") or word.lower() not in verbs or i == 0:
            continue
        j = i - 1
        if out[j][1] == "RB" and j > 0:
            j -= 1
        prev = out[j][1]
        nxt = out[i + 1][1] if i + 1 < len(out) else ""
        if prev == "MD" or (prev == "TO" and nxt in ("DT", "PRP", "PRP$", "NNS")):
            out[i] = (word, "VB")
    return out


def capitalize_initial(tagged):
    """Glosses start lowercase but requirements start with a capital. Tag
    the lowercase form, then capitalize the first word and keep its tag so
    the model does not learn "capitalized at sentence start means NNP"."""
    if not tagged:
        return tagged
    word, tag = tagged[0]
    if word[:1].islower():
        tagged = [(word[0].upper() + word[1:], tag)] + list(tagged[1:])
    return tagged


DATA_FILES = ["data.noun1", "data.noun2", "data.verb", "data.adj", "data.adv"]


def gloss_sentences(path):
    with open(path, encoding="latin-1") as f:
        for line in f:
            if line.startswith("  ") or "|" not in line:
                continue
            gloss = line.split("|", 1)[1].strip()
            for part in gloss.split(";"):
                part = part.strip()
                if not part:
                    continue
                if part.startswith('"'):
                    part = part.strip('"').strip()
                    if len(part.split()) >= 3:
                        yield ("example", part)
                elif len(part.split()) >= 4:
                    yield ("gloss", part)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wordnet-dir", required=True)
    ap.add_argument("--tokenizer", required=True, help="path to the train_tagger binary")
    ap.add_argument("--verb-index", required=True, help="data/lemma/index.tsv")
    ap.add_argument("--out", required=True)
    ap.add_argument("--max-sentences", type=int, default=60000)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    examples, glosses = [], []
    for name in DATA_FILES:
        for kind, text in gloss_sentences(pathlib.Path(args.wordnet_dir) / name):
            (examples if kind == "example" else glosses).append(text)

    verbs = load_verbs(args.verb_index)
    rng = random.Random(args.seed)
    rng.shuffle(examples)
    rng.shuffle(glosses)
    # Usage examples are full sentences; glosses are mostly noun/verb phrases.
    n_examples = min(len(examples), args.max_sentences * 2 // 3)
    chosen = examples[:n_examples] + glosses[: args.max_sentences - n_examples]
    rng.shuffle(chosen)

    chosen = [t if t.endswith((".", "!", "?")) else t + "." for t in chosen]
    chosen = [" ".join(t.split()) for t in chosen]
    result = subprocess.run(
        [args.tokenizer, "tokenize"],
        input="\n".join(chosen) + "\n",
        capture_output=True,
        text=True,
        check=True,
    )
    lines = result.stdout.split("\n")

    skipped = 0
    with open(args.out, "w", encoding="utf-8") as out:
        for line in lines[: len(chosen)]:
            tokens = [t for t in line.split("\x1f") if t]
            if not tokens or any(" " in t for t in tokens):
                skipped += 1
                continue
            tagged = pattern_tag(" ".join(tokens), tokenize=False)
            if [w for w, _ in tagged] != tokens:
                skipped += 1
                continue
            for word, tag in capitalize_initial(repair(tagged, verbs)):
                out.write(f"{word}\t{tag}\n")
            out.write("\n")
    print(f"examples={n_examples} glosses={len(chosen) - n_examples} skipped={skipped}")


if __name__ == "__main__":
    main()
