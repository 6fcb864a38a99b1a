#!/usr/bin/env python3
"""Regenerate the bundled demo corpus (``data/seed_incidents.csv``).

118 incidents in the bulk-import template, generated from fixed pools
with a fixed RNG seed: same script, same file, every time.  Incident
names are unique by construction so re-importing the corpus is a pure
update."""

from __future__ import annotations

import csv
import random
from pathlib import Path

import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from disinfo_exchange.catalog import default_catalog_path, load_catalog_file  # noqa: E402

ROWS = 118
RNG_SEED = 20240118

THEMES = (
    "biolab", "refugee crime wave", "election fraud", "sanctions backfire",
    "grain theft", "energy blackmail", "crisis actor", "currency collapse",
    "diaspora spy ring", "historical revisionism", "peacekeeper atrocity",
    "vaccine side-effect", "church persecution", "border provocation",
)

TEMPLATES = (
    "Fabricated {theme} story amplified in {country}",
    "Coordinated denial of {theme} reports in {country}",
    "State media push on {theme} narrative aimed at {country}",
    "Bot network spreads {theme} rumors across {country}",
    "Forged documents alleging {theme} planted in {country}",
    "Astroturfed outrage over {theme} stoked in {country}",
)

ACTORS = (
    "Russia", "Internet Research Agency", "China", "Iran", "North Korea",
    "Belarus", "Venezuela", "Cuba", "Spamouflage", "Doppelganger network",
    "Ghostwriter", "Secondary Infektion", "Storm-1516", "CyberBerkut",
)

COUNTRIES = (
    "Ukraine", "United States", "Poland", "Germany", "France",
    "United Kingdom", "Lithuania", "Latvia", "Estonia", "Moldova",
    "Georgia", "Finland", "Sweden", "Romania", "Slovakia",
    "Czech Republic",  # alias spelling on purpose — must resolve to Czechia
    "Taiwan", "Japan", "South Korea", "Australia", "Canada",
    "Netherlands", "Italy", "Spain", "Brazil", "India",
    "Philippines", "Kenya",
)

DESCRIPTION_OPENERS = (
    "A wave of near-identical posts pushed the claim within hours.",
    "The story first appeared on a fringe outlet before jumping platforms.",
    "Screenshots of a forged memo circulated through diaspora channels.",
    "Paid placements carried the narrative into mainstream feeds.",
    "Official spokespeople repeated the claim at press briefings.",
    "A cluster of recently created accounts drove the initial spike.",
)

DESCRIPTION_FOLLOWUPS = (
    "Fact-checkers traced the imagery to unrelated events from years earlier.",
    "Engagement was concentrated in a handful of coordinated groups.",
    "The narrative resurfaced with each round of policy discussion.",
    "Local media picked it up before corrections could land.",
    "Takedowns removed the core accounts but mirrors persisted.",
    "",
)


def main() -> None:
    catalog = load_catalog_file(default_catalog_path())
    codes = sorted(t.external_id for t in catalog)
    names_by_code = {t.external_id: t.name for t in catalog}

    rng = random.Random(RNG_SEED)
    used_names: set[str] = set()
    rows: list[list[str]] = []

    while len(rows) < ROWS:
        theme = rng.choice(THEMES)
        template = rng.choice(TEMPLATES)
        countries = rng.sample(COUNTRIES, k=rng.randint(1, 3))
        name = template.format(theme=theme, country=countries[0])
        if name in used_names:
            continue
        used_names.add(name)

        actors = rng.sample(ACTORS, k=rng.randint(1, 3))
        date = (
            f"{rng.randint(2014, 2024):04d}-"
            f"{rng.randint(1, 12):02d}-"
            f"{rng.randint(1, 28):02d}"
        )
        technique_codes = rng.sample(codes, k=rng.randint(3, 14))
        # A few rows reference techniques by name instead of code — the
        # importer must accept both.
        refs = list(technique_codes)
        if len(rows) % 20 == 7:
            refs[0] = names_by_code[refs[0]]

        if rng.random() < 0.1:
            description = ""
        else:
            opener = rng.choice(DESCRIPTION_OPENERS)
            follow = rng.choice(DESCRIPTION_FOLLOWUPS)
            description = f"{opener} {follow}".strip()

        rows.append(
            [
                name,
                description,
                date,
                ";".join(countries),
                ";".join(actors),
                ";".join(refs),
            ]
        )

    out = Path(__file__).resolve().parents[1] / "src" / "disinfo_exchange" / "data" / "seed_incidents.csv"
    with open(out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(
            ["name", "description", "date", "target_countries", "threat_actors", "disarm_techniques"]
        )
        writer.writerows(rows)
    print(f"wrote {out} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
