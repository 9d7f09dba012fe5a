import pytest

from vartani.ner import (
    EntityKind,
    Gazetteers,
    find_entities,
    load_gazetteers,
)
from vartani.script import Sentence


def entities_of(text: str, gaz=None):
    return find_entities(Sentence.from_text(text), gaz or Gazetteers.empty())


def write_gazetteer(tmp_path, label: str, entries):
    (tmp_path / f"{label}.txt").write_text("\n".join(entries) + "\n", encoding="utf-8")


class TestPatternRules:
    def test_email(self):
        spans = entities_of("लिखें user@example.com पर")
        kinds = {(e.kind, e.label) for e in spans}
        assert (EntityKind.PATTERN, "email") in kinds

    def test_email_with_digits_spans_tokens(self):
        text = "user1@example.com"
        spans = entities_of(text)
        email = [e for e in spans if e.label == "email"]
        assert len(email) == 1
        sent = Sentence.from_text(text)
        lo, hi = email[0].token_indices
        assert lo == 0 and hi == len(sent.tokens)

    def test_phone_variants(self):
        for text in ("9876543210", "+919876543210", "09876543210"):
            spans = entities_of(text)
            assert any(e.label == "phone" for e in spans), text

    def test_eleven_digits_is_not_phone(self):
        spans = entities_of("98765432101")
        assert not any(e.label == "phone" for e in spans)

    def test_date_plausible(self):
        assert any(e.kind is EntityKind.TEMPORAL for e in entities_of("15/08/1947"))
        assert any(e.kind is EntityKind.TEMPORAL for e in entities_of("१५-०८-१९४७"))

    def test_date_implausible_fields(self):
        spans = entities_of("32/13/1947")
        assert not any(e.label == "date" for e in spans)

    def test_time_bounds(self):
        assert any(e.label == "time" for e in entities_of("23:59 बजे"))
        assert not any(e.label == "time" for e in entities_of("24:00 बजे"))


class TestNumerals:
    def test_devanagari_digit_token(self):
        spans = entities_of("१२३")
        assert spans and spans[0].kind is EntityKind.NUMERAL

    def test_currency_rupee_sign(self):
        spans = entities_of("₹100 की")
        labels = {e.label for e in spans}
        assert "currency" in labels

    def test_currency_with_space(self):
        spans = entities_of("रु 100 दे")
        assert any(e.label == "currency" for e in spans)


class TestTextual:
    def test_single_word_gazetteer(self, tmp_path):
        write_gazetteer(tmp_path, "person", ["राम", "सीता"])
        gaz = load_gazetteers(tmp_path)
        spans = entities_of("राम ने कहा", gaz)
        assert spans and spans[0].kind is EntityKind.TEXTUAL
        assert spans[0].label == "person"
        assert spans[0].token_indices == (0, 1)

    def test_multiword_entry(self, tmp_path):
        write_gazetteer(tmp_path, "place", ["नई दिल्ली"])
        gaz = load_gazetteers(tmp_path)
        sent = Sentence.from_text("वह नई दिल्ली गया")
        spans = find_entities(sent, gaz)
        textual = [e for e in spans if e.kind is EntityKind.TEXTUAL]
        assert len(textual) == 1
        lo, hi = textual[0].token_indices
        covered = "".join(t.surface for t in sent.tokens[lo:hi])
        assert covered == "नई दिल्ली"

    def test_longest_match_wins(self, tmp_path):
        write_gazetteer(tmp_path, "person", ["राम"])
        write_gazetteer(tmp_path, "pair", ["राम सीता"])
        gaz = load_gazetteers(tmp_path)
        spans = entities_of("राम सीता वन गए", gaz)
        labels = [e.label for e in spans]
        assert "pair" in labels and "person" not in labels

    def test_coverage_monotonicity(self, tmp_path):
        text = "राम सीता वन गए"
        write_gazetteer(tmp_path, "person", ["राम"])
        before = entities_of(text, load_gazetteers(tmp_path))
        write_gazetteer(tmp_path, "pair", ["राम सीता"])
        after = entities_of(text, load_gazetteers(tmp_path))

        def covered(spans):
            out = set()
            for e in spans:
                out.update(range(*e.token_indices))
            return out

        assert covered(before) <= covered(after)


class TestInvariantsAndLoading:
    def test_no_overlap_and_in_range(self, tmp_path):
        write_gazetteer(tmp_path, "person", ["राम"])
        gaz = load_gazetteers(tmp_path)
        sent = Sentence.from_text("राम १२३ 15/08/1947 user@ex.com ₹100")
        spans = find_entities(sent, gaz)
        seen = set()
        for e in spans:
            lo, hi = e.token_indices
            assert 0 <= lo < hi <= len(sent.tokens)
            rng = set(range(lo, hi))
            assert not rng & seen
            seen |= rng

    def test_empty_directory(self, tmp_path):
        gaz = load_gazetteers(tmp_path)
        assert gaz.labels == []

    def test_missing_directory(self, tmp_path):
        with pytest.raises(OSError):
            load_gazetteers(tmp_path / "absent")

    def test_gazetteer_sizes(self, tmp_path):
        write_gazetteer(tmp_path, "person", ["राम", "सीता", "# comment", ""])
        gaz = load_gazetteers(tmp_path)
        assert gaz.size("person") == 2

    def test_entries_longer_than_three_words_dropped(self, tmp_path):
        write_gazetteer(tmp_path, "place", ["एक दो तीन चार", "नई दिल्ली"])
        gaz = load_gazetteers(tmp_path)
        assert gaz.size("place") == 1

    def test_deterministic(self, tmp_path):
        write_gazetteer(tmp_path, "person", ["राम"])
        gaz = load_gazetteers(tmp_path)
        text = "राम ने १५/०८/१९४७ को ₹100 दिए"
        assert entities_of(text, gaz) == entities_of(text, gaz)
