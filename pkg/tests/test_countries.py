import pytest

from disinfo_exchange.countries import resolve_country


@pytest.mark.parametrize(
    "raw, code, display",
    [
        ("Ukraine", "UA", "Ukraine"),
        ("ukraine", "UA", "Ukraine"),
        ("  UKRAINE  ", "UA", "Ukraine"),
        ("Russia", "RU", "Russia"),
        ("Russian Federation", "RU", "Russia"),
        ("United States", "US", "United States"),
        ("USA", "US", "United States"),
        ("United States of America", "US", "United States"),
        ("UK", "GB", "United Kingdom"),
        ("Czech Republic", "CZ", "Czechia"),
        ("South Korea", "KR", "South Korea"),
        ("Republic of Korea", "KR", "South Korea"),
        ("Côte d'Ivoire", "CI", "Côte d'Ivoire"),
        ("Ivory Coast", "CI", "Côte d'Ivoire"),
        ("Moldova", "MD", "Moldova"),
        ("Bosnia and Herzegovina", "BA", "Bosnia and Herzegovina"),
    ],
)
def test_resolves_names_and_aliases(raw, code, display):
    assert resolve_country(raw) == (code, display)


@pytest.mark.parametrize("raw, code", [("UA", "UA"), ("ua", "UA"), ("de", "DE")])
def test_bare_alpha2_codes(raw, code):
    got_code, display = resolve_country(raw)
    assert got_code == code
    assert len(display) > 2  # expanded to the display name


def test_unknown_passes_through_trimmed():
    code, display = resolve_country("  Atlantis  ")
    assert code is None
    assert display == "Atlantis"


def test_resolution_collapses_variant_spellings():
    # Every alias of a country lands on the same (code, display) pair, so
    # downstream ids built from the display name collide as intended.
    variants = ["Russia", "russian federation", "RU", " RUSSIA"]
    assert len({resolve_country(v) for v in variants}) == 1
