"""Markdown incident reports.

One incident renders to one deterministic markdown document — same
incident, same bytes — so reports can be diffed and cached.
"""

from __future__ import annotations

from ..store import IncidentView
from ..transform import technique_code


def render_markdown(view: IncidentView) -> str:
    incident = view.intrusion_set
    first_seen = incident.properties.get("first_seen", "")
    date = first_seen[:10] if isinstance(first_seen, str) else ""

    lines: list[str] = [f"# {incident.name or incident.id}", ""]
    if date:
        lines += [f"*First seen: {date}*", ""]
    lines += ["## Description", "", incident.description or "_(none)_", ""]

    lines += ["## Threat actors", ""]
    if view.actors:
        lines += [f"- {actor.name}" for actor in view.actors]
    else:
        lines.append("_(none identified)_")
    lines.append("")

    lines += ["## Targeted countries", ""]
    if view.locations:
        for location in view.locations:
            code = location.properties.get("country")
            suffix = f" ({code})" if isinstance(code, str) else ""
            lines.append(f"- {location.name}{suffix}")
    else:
        lines.append("_(none identified)_")
    lines.append("")

    lines += ["## Techniques", ""]
    if view.techniques:
        lines += ["| Code | Technique |", "| --- | --- |"]
        for technique in view.techniques:
            code = technique_code(technique) or ""
            lines.append(f"| {code} | {technique.name or technique.id} |")
    else:
        lines.append("_(none identified)_")
    lines.append("")

    return "\n".join(lines)
