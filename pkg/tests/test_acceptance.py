"""Acceptance suite: one test per release criterion.

Each test prints a PASS/FAIL line through the terminal-summary hook in
conftest.py. Everything runs offline against the mock provider.
"""

import json
import random
import subprocess
import sys
import time


from worked_example import TABLE1
from genutil import naive_med, perturb_word, random_ascii_pair, random_word, random_words
from vartani.correct import edit_distance, select_correction
from vartani.detect import MASK_TOKEN, detect_errors
from vartani.evalharness import GoldPair, evaluate
from vartani.lexicon import bundled_lexicon_path, load_lexicon
from vartani.mlm import Candidate, CandidateList, MockProvider
from vartani.ner import bundled_gazetteer_dir, find_entities, load_gazetteers
from vartani.pipeline import PipelineConfig
from vartani.script import Sentence, from_wx, to_wx


def test_edit_distance_oracle_equivalence():
    """DP distance equals the naive recursion on 1000 short random pairs."""
    rng = random.Random(20240810)
    alphabet = "abKAyrl 01"  # 10 symbols
    pairs = [random_ascii_pair(rng, alphabet, max_len=8) for _ in range(1000)]
    start = time.perf_counter()
    for a, b in pairs:
        assert edit_distance(a, b) == naive_med(a, b), (a, b)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"oracle comparison took {elapsed:.2f}s"


def test_candidate_table_reproduction():
    """Transliterations, the distance column, and the final pick."""
    expected = [
        ("खाया", "KAyA", 1),
        ("बनाया", "banAyA", 3),
        ("खिलाया", "KilAyA", 3),
        ("लाया", "lAyA", 1),
        ("पकाया", "pakAyA", 3),
    ]
    for (word, wx, med), cand in zip(expected, TABLE1):
        assert cand.word == word
        assert to_wx(word) == wx
        assert edit_distance(to_wx(word), "rAyA") == med
    correction = select_correction("राया", CandidateList(3, TABLE1))
    assert correction.chosen.word == "खाया"
    assert correction.med == 1
    assert correction.tie_broken_by_probability is True


def test_end_to_end_cli_correction(mock_table_file):
    """cmd_correct reproduces the worked example byte for byte."""
    result = subprocess.run(
        [sys.executable, "-m", "vartani.cli", "correct", "--mock-table", mock_table_file],
        input="राम ने खाना रया".encode("utf-8"),
        capture_output=True,
    )
    assert result.returncode == 0, result.stderr
    assert result.stdout == "राम ने खाना खाया".encode("utf-8")


def test_transliteration_round_trip():
    """Identity on the bundled lexicon and 10,000 generated words."""
    lexicon = load_lexicon(bundled_lexicon_path())
    assert lexicon.size >= 1000
    failures = []
    for word in sorted(lexicon.words):
        if from_wx(to_wx(word)) != word:
            failures.append(word)
    for word in random_words(seed=20240811, count=10_000):
        if from_wx(to_wx(word)) != word:
            failures.append(word)
    assert failures == []


def test_detection_soundness():
    """Exactly the perturbed words are flagged across 10,000 sentences."""
    lexicon = load_lexicon(bundled_lexicon_path())
    gazetteers = load_gazetteers(bundled_gazetteer_dir())
    gaz_words = {w for _, entries in gazetteers.items() for e in entries for w in e}
    lex_words = sorted(lexicon.words)
    rng = random.Random(1894)
    violations = 0
    for _ in range(10_000):
        expected = set()
        parts = []
        for _ in range(rng.randint(1, 7)):
            r = rng.random()
            if r < 0.45:
                parts.append(rng.choice(lex_words))
            elif r < 0.58:
                parts.append(rng.choice(sorted(gaz_words)))
            elif r < 0.68:
                parts.append(str(rng.randint(0, 99999)))
            elif r < 0.76:
                parts.append(rng.choice([",", "!", "?", "॥", ";"]))
            else:
                bad = perturb_word(rng, rng.choice(lex_words))
                while lexicon.contains(bad) or bad in gaz_words:
                    bad = perturb_word(rng, random_word(rng))
                parts.append(bad)
                expected.add(bad)
        sent = Sentence.from_text(" ".join(parts))
        entities = find_entities(sent, gazetteers)
        flagged = {e.surface for e in detect_errors(sent, lexicon, entities)}
        if flagged != expected:
            violations += 1
    assert violations == 0


# Gold-rank schedule for the synthetic corpus: rank -> how many entries.
# Accuracy@k is the fraction of entries with rank <= k:
#   @1 = 25/100, @3 = 50/100, @5 = 65/100, @10 = 80/100, @20 = 95/100.
RANK_SCHEDULE = [
    (1, 25), (2, 10), (3, 15), (4, 5), (5, 10),
    (6, 5), (10, 10), (11, 5), (20, 10), (21, 5),
]
EXPECTED_ACCURACY = {1: 0.25, 3: 0.50, 5: 0.65, 10: 0.80, 20: 0.95}


def build_synthetic_corpus():
    """100 one-error pairs with the gold word at a known candidate rank.

    Decoys are long words, at least six WX characters longer than the noisy
    word, so the gold word (a one-consonant perturbation away) is the
    unique minimum-distance candidate whenever the list is long enough to
    include it.
    """
    lexicon = load_lexicon(bundled_lexicon_path())
    gazetteers = load_gazetteers(bundled_gazetteer_dir())
    gaz_words = {w for _, entries in gazetteers.items() for e in entries for w in e}
    lex_words = [w for w in sorted(lexicon.words) if len(w) >= 3]
    rng = random.Random(424242)

    ranks = [rank for rank, count in RANK_SCHEDULE for _ in range(count)]
    rng.shuffle(ranks)

    pairs = []
    table = {}
    for rank in ranks:
        gold = rng.choice(lex_words)
        noisy = perturb_word(rng, gold)
        while lexicon.contains(noisy) or noisy in gaz_words:
            gold = rng.choice(lex_words)
            noisy = perturb_word(rng, gold)
        scaffold = rng.sample(lex_words, 2)
        noisy_sent = f"{scaffold[0]} {noisy} {scaffold[1]}"
        gold_sent = f"{scaffold[0]} {gold} {scaffold[1]}"

        target_len = len(to_wx(noisy)) + 6
        decoys = []
        syllables = ["का", "खी", "गू", "चे", "जो", "टा", "ठी", "डू", "ते", "धो", "ना", "पी"]
        while len(decoys) < 21:
            word = ""
            while len(to_wx(word)) < target_len:
                word += rng.choice(syllables)
            if word != gold and word not in decoys:
                decoys.append(word)
        words = []
        di = iter(decoys)
        for pos in range(1, 22):
            words.append(gold if pos == rank else next(di))
        cands = tuple(
            Candidate(w, round(0.95 * (0.9 ** i), 6)) for i, w in enumerate(words)
        )
        masked = tuple(
            MASK_TOKEN if w == noisy else w
            for w in (scaffold[0], noisy, scaffold[1])
        )
        table[(masked, 1)] = cands
        pairs.append(GoldPair(noisy=noisy_sent, gold=gold_sent))
    return pairs, MockProvider(table)


def test_harness_reproduces_hand_computed_accuracy():
    """accuracy@{1,3,5,10,20} matches the values fixed by the rank schedule."""
    pairs, provider = build_synthetic_corpus()
    cfg = PipelineConfig(
        lexicon_path=bundled_lexicon_path(),
        gazetteer_dir=bundled_gazetteer_dir(),
    )
    report = evaluate(pairs, cfg, provider, ks=[1, 3, 5, 10, 20])
    assert report.detected == 100
    for row in report.rows:
        assert row.accuracy == EXPECTED_ACCURACY[row.k], row
        assert row.corrected + row.wrong + row.skipped == row.detected


def test_eval_report_shape_and_determinism(tmp_path):
    """cmd_eval emits the five-row table deterministically."""
    pairs, provider = build_synthetic_corpus()
    gold_path = tmp_path / "gold.tsv"
    gold_path.write_text(
        "".join(f"{p.noisy}\t{p.gold}\n" for p in pairs), encoding="utf-8"
    )
    table_doc = {}
    for (masked, idx), cands in provider._table.items():
        table_doc[" ".join(masked)] = {
            str(idx): {
                "candidates": [
                    {"token": c.word, "prob": c.probability} for c in cands
                ]
            }
        }
    table_path = tmp_path / "table.json"
    table_path.write_text(json.dumps(table_doc, ensure_ascii=False), encoding="utf-8")

    cmd = [
        sys.executable, "-m", "vartani.cli",
        "eval", str(gold_path),
        "--mock-table", str(table_path),
        "--ks", "1,3,5,10,20",
    ]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout

    lines = first.stdout.decode("utf-8").splitlines()
    assert lines[0] == "S.No.\tCandidates\tAccuracy %"
    rows = [line.split("\t") for line in lines[1:6]]
    assert [int(r[0]) for r in rows] == [1, 2, 3, 4, 5]
    assert [int(r[1]) for r in rows] == [1, 3, 5, 10, 20]
    for r in rows:
        assert 0.0 <= float(r[2]) / 100.0 <= 1.0


def test_selection_invariance_under_probability_scaling():
    """Scaling all probabilities never changes the chosen word."""
    rng = random.Random(5150)
    vocab = random_words(seed=77, count=400, max_syllables=4)
    checked = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        words = rng.sample(vocab, n)
        probs = sorted((rng.uniform(0.005, 0.5) for _ in range(n)), reverse=True)
        oov = perturb_word(rng, rng.choice(vocab))
        base = CandidateList(0, tuple(Candidate(w, p) for w, p in zip(words, probs)))
        chosen = select_correction(oov, base).chosen.word
        for factor in (0.001, 0.25, 1.0, 1.99):
            scaled = CandidateList(
                0, tuple(Candidate(w, p * factor) for w, p in zip(words, probs))
            )
            assert select_correction(oov, scaled).chosen.word == chosen
        checked += 1
    assert checked == 1000
