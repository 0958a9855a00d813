from __future__ import annotations

import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mscbench.errors import DataError, MalformedCodeError
from mscbench.taxonomy import (
    MscCode,
    ValidationStatus,
    canonical,
    extract_codes,
    load_taxonomy,
    parse_code,
    scan_candidates,
    top_level,
    try_parse_code,
    validate,
)


class TestParseCode:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("11F27", MscCode("11", "F", "27")),
            ("11", MscCode("11")),
            ("30F", MscCode("30", "F")),
            ("18-", MscCode("18", "-")),
            ("18-02", MscCode("18", "-", "02")),
            ("  22E50 ", MscCode("22", "E", "50")),
        ],
    )
    def test_accepted_shapes(self, text, expected):
        assert parse_code(text) == expected

    def test_case_insensitive_area(self):
        assert canonical(parse_code("15a42")) == "15A42"

    def test_wildcard_subtopic_equals_bare_form(self):
        assert parse_code("30Fxx") == parse_code("30F")
        assert parse_code("30FXX") == parse_code("30F")
        assert canonical(parse_code("30Fxx")) == "30F"

    def test_dash_wildcard_is_top_level(self):
        code = parse_code("68-xx")
        assert canonical(code) == "68"
        assert code == parse_code("68")
        assert canonical(parse_code("11-XX")) == "11"

    @pytest.mark.parametrize(
        "text",
        [
            "85A-XX",
            "58A5",
            "1",
            "115",
            "11F2",
            "11F270",
            "AB",
            "1x",
            "11--02",
            "11 F27",
            "",
            "none",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(MalformedCodeError):
            parse_code(text)
        assert try_parse_code(text) is None

    def test_subtopic_requires_area(self):
        with pytest.raises(ValueError):
            MscCode("11", None, "27")


class TestCanonicalAndTopLevel:
    def test_identity_rendering(self):
        assert canonical(MscCode("11", "F", "27")) == "11F27"

    def test_top_level_projection(self):
        assert canonical(top_level(parse_code("22E50"))) == "22"
        assert canonical(top_level(parse_code("97"))) == "97"

    def test_top_level_idempotent(self):
        for text in ("11F27", "30Fxx", "18-02", "42"):
            code = parse_code(text)
            assert top_level(top_level(code)) == top_level(code)

    def test_round_trip_all_dataset_codes(self, taxonomy):
        for entry in taxonomy.entries:
            assert canonical(parse_code(entry)) == entry


@given(
    top=st.integers(0, 99),
    area=st.sampled_from("ABCDEFGHJKLMNPQRSTUWXYZ"),
    sub=st.integers(0, 99),
)
def test_round_trip_generated_codes(top, area, sub):
    text = f"{top:02d}{area}{sub:02d}"
    assert canonical(parse_code(text)) == text


@given(
    top=st.integers(0, 99),
    area=st.sampled_from("ABCDEFGHJKLMNPQRSTUWXYZ"),
    marker=st.sampled_from(["xx", "XX", "xX", "Xx"]),
)
def test_wildcard_equivalence_property(top, area, marker):
    bare = f"{top:02d}{area}"
    assert parse_code(bare + marker) == parse_code(bare)


class TestValidate:
    def test_hallucination_is_unknown(self, taxonomy):
        assert validate(parse_code("35Q72"), taxonomy) is ValidationStatus.UNKNOWN_CODE
        assert validate(parse_code("65F90"), taxonomy) is ValidationStatus.UNKNOWN_CODE

    def test_known_codes(self, taxonomy):
        for text in ("00A05", "11", "97U50", "18-02", "30Fxx", "15a42"):
            assert validate(parse_code(text), taxonomy) is ValidationStatus.KNOWN

    def test_unknown_top_level(self, taxonomy):
        assert validate(parse_code("99"), taxonomy) is ValidationStatus.UNKNOWN_CODE


class TestExtractCodes:
    def test_prose_extraction(self, taxonomy):
        hits = extract_codes("likely falls under 22E50 and 11F70.", taxonomy)
        assert [(canonical(c), s) for c, s, _ in hits] == [
            ("22E50", ValidationStatus.KNOWN),
            ("11F70", ValidationStatus.KNOWN),
        ]

    def test_empty_text(self, taxonomy):
        assert extract_codes("", taxonomy) == []

    def test_unknown_code_flagged(self, taxonomy):
        hits = extract_codes("codes 35Q72 and 74B20", taxonomy)
        assert [(canonical(c), s) for c, s, _ in hits] == [
            ("35Q72", ValidationStatus.UNKNOWN_CODE),
            ("74B20", ValidationStatus.KNOWN),
        ]

    def test_arxiv_identifiers_do_not_match(self, taxonomy):
        assert extract_codes("see 2403.05604 and 2311.15913", taxonomy) == []

    def test_year_like_numbers_do_not_match(self, taxonomy):
        assert extract_codes("the MSC 2020 classification", taxonomy) == []

    def test_spans_increasing_and_reparse(self, taxonomy):
        text = "Primary: 22E50; secondary 11F27, 30Fxx and 18-02."
        hits = extract_codes(text, taxonomy)
        assert len(hits) == 4
        last_end = -1
        for code, _status, (start, end) in hits:
            assert start > last_end
            last_end = end
            assert parse_code(text[start:end]) == code

    def test_near_miss_malformed_candidates(self):
        tokens = [t for t, _s, c in scan_candidates("use 85A-XX or 58A5 here") if c is None]
        assert tokens == ["85A-XX", "58A5"]

    def test_prose_hyphen_words_not_candidates(self):
        assert scan_candidates("a 40-year-old conjecture") == []


@given(st.text(max_size=200))
def test_extract_codes_properties(taxonomy_text):
    from mscbench.taxonomy import shipped_taxonomy

    taxonomy = shipped_taxonomy()
    hits = extract_codes(taxonomy_text, taxonomy)
    last_end = -1
    for code, _status, (start, end) in hits:
        assert start > last_end
        last_end = end
        assert parse_code(taxonomy_text[start:end]) == code


class TestLoadTaxonomy:
    def test_shipped_counts(self, taxonomy):
        assert taxonomy.level_counts == (63, 529, 6022)
        assert len(taxonomy.entries) == 63 + 529 + 6022

    def test_prefix_closure_of_shipped_dataset(self, taxonomy):
        for entry in taxonomy.entries:
            if len(entry) == 3:
                assert entry[:2] in taxonomy.entries
            elif len(entry) == 5:
                assert entry[:3] in taxonomy.entries

    def test_empty_file(self):
        assert load_taxonomy(io.StringIO("")).level_counts == (0, 0, 0)

    def test_minimal_chain(self):
        tax = load_taxonomy(io.StringIO("11\tNumber theory\n11F\tForms\n11F27\tTheta\n"))
        assert tax.level_counts == (1, 1, 1)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DataError, match="not found"):
            load_taxonomy(tmp_path / "absent.tsv")

    def test_duplicate_code(self):
        with pytest.raises(DataError, match="line 2.*duplicate"):
            load_taxonomy(io.StringIO("11\ta\n11\tb\n"))

    def test_orphan_reports_line(self):
        with pytest.raises(DataError, match="orphan code '11F27'"):
            load_taxonomy(io.StringIO("11\ta\n11F27\tc\n"))

    def test_semicolon_delimiter_tolerated(self):
        tax = load_taxonomy(io.StringIO("11;Number theory\n"))
        assert tax.describe("11") == "Number theory"

    def test_comments_ignored(self):
        tax = load_taxonomy(io.StringIO("# header\n11\tNumber theory\n"))
        assert tax.level_counts == (1, 0, 0)

    def test_immutability(self, taxonomy):
        with pytest.raises(TypeError):
            taxonomy.entries["11"] = "changed"
