#!/usr/bin/env python3
"""Regenerate the vendored DISARM framework snapshot.

Writes ``src/disinfo_exchange/data/disarm_snapshot.json``: a STIX 2.1
bundle of attack-patterns keyed by DISARM codes, plus an identity object
carrying the snapshot's version label.  Output is canonical (sorted keys,
two-space indent) and fully deterministic, so re-running this script with
unchanged inputs reproduces the file byte-for-byte.
"""

from __future__ import annotations

import json
import uuid
from pathlib import Path

SNAPSHOT_VERSION = "DISARM 1.6-snapshot"
STAMP = "2024-11-22T14:30:00.000000Z"

# Stable namespace for the fixture ids in this file (not the platform's
# runtime namespace; these ids live in the data file itself).
FIXTURE_NS = uuid.UUID("0a6fe9e7-4b9e-4d42-9f1e-1f0c9b3a5a21")

GITHUB = "https://github.com/DISARMFoundation/DISARMframeworks/blob/main/generated_pages"

# (code, name, tactic slug, description)
TECHNIQUES: tuple[tuple[str, str, str, str], ...] = (
    # TA01 Plan Strategy
    ("T0073", "Determine Target Audiences", "plan-strategy",
     "Decide which groups of people the operation should reach and influence."),
    ("T0074", "Determine Strategic Ends", "plan-strategy",
     "Define the long-term outcome the campaign is meant to produce, such as policy change or social discord."),
    # TA02 Plan Objectives
    ("T0002", "Facilitate State Propaganda", "plan-objectives",
     "Organize citizens or proxies around pro-state messaging and delegitimize opposing voices."),
    ("T0066", "Degrade Adversary", "plan-objectives",
     "Plan to damage an opponent's image, capability or will to respond."),
    ("T0075", "Dismiss", "plan-objectives",
     "Push back on criticism by denying the facts or attacking the critic."),
    ("T0076", "Distort", "plan-objectives",
     "Twist a narrative's framing so the underlying facts read differently."),
    ("T0077", "Distract", "plan-objectives",
     "Shift attention onto a different actor, event or narrative."),
    ("T0078", "Dismay", "plan-objectives",
     "Threaten or frighten opponents and audiences to discourage engagement."),
    ("T0079", "Divide", "plan-objectives",
     "Deepen existing fault lines between communities to fragment a society."),
    # TA13 Target Audience Analysis
    ("T0080", "Map Target Audience Information Environment", "target-audience-analysis",
     "Chart the channels, influencers and media habits of the intended audience."),
    ("T0081", "Identify Social and Technical Vulnerabilities", "target-audience-analysis",
     "Find grievances, divisions and platform weaknesses that messaging can exploit."),
    # TA14 Develop Narratives
    ("T0003", "Leverage Existing Narratives", "develop-narratives",
     "Attach the campaign to stories the audience already believes."),
    ("T0004", "Develop Competing Narratives", "develop-narratives",
     "Run several contradictory explanations at once to crowd out the truth."),
    ("T0022", "Leverage Conspiracy Theory Narratives", "develop-narratives",
     "Recycle or seed conspiracy theories that fit the operation's goals."),
    ("T0040", "Demand Insurmountable Proof", "develop-narratives",
     "Insist that ordinary evidence is never sufficient, shifting the burden of proof onto defenders of the factual account."),
    ("T0068", "Respond to Breaking News Event or Active Crisis", "develop-narratives",
     "Move fast on breaking events to set the frame before verified reporting lands."),
    # TA06 Develop Content
    ("T0015", "Create Hashtags and Search Artifacts", "develop-content",
     "Mint hashtags and search-bait terms that rally and index the campaign."),
    ("T0016", "Create Clickbait", "develop-content",
     "Package content with sensational hooks to maximize clicks and shares."),
    ("T0019", "Generate Information Pollution", "develop-content",
     "Flood the space with filler and noise to bury authoritative content."),
    ("T0023", "Distort Facts", "develop-content",
     "Alter true material just enough to change what it appears to show."),
    ("T0084", "Reuse Existing Content", "develop-content",
     "Repost, re-caption or recycle old material as if it were new and relevant."),
    ("T0085", "Develop Text-Based Content", "develop-content",
     "Produce articles, posts and comments tailored to the operation."),
    ("T0085.001", "Develop AI-Generated Text", "develop-content",
     "Use language models to mass-produce fluent, varied text content."),
    ("T0086", "Develop Image-Based Content", "develop-content",
     "Produce memes, screenshots and doctored photos for the campaign."),
    ("T0086.002", "Develop AI-Generated Images", "develop-content",
     "Use generative models to fabricate photorealistic or stylized images."),
    ("T0087", "Develop Video-Based Content", "develop-content",
     "Produce video segments, clips and edits carrying campaign narratives."),
    ("T0087.001", "Develop AI-Generated Videos", "develop-content",
     "Fabricate deepfake or synthetic video of events or speakers."),
    ("T0088", "Develop Audio-Based Content", "develop-content",
     "Produce podcasts, voice clips or synthetic audio for the campaign."),
    ("T0089", "Obtain Private Documents", "develop-content",
     "Acquire non-public material, by theft or leak, for later selective release."),
    # TA15 Establish Assets
    ("T0007", "Create Inauthentic Social Media Pages and Groups", "establish-assets",
     "Stand up pages and groups that pose as organic communities."),
    ("T0010", "Cultivate Ignorant Agents", "establish-assets",
     "Recruit unwitting locals to carry and amplify campaign messages."),
    ("T0013", "Create Inauthentic Websites", "establish-assets",
     "Build sites that imitate news outlets or civic organizations."),
    ("T0014", "Prepare Fundraising Campaigns", "establish-assets",
     "Set up fundraising to finance operations or to harvest supporter data."),
    ("T0065", "Prepare Physical Broadcast Capabilities", "establish-assets",
     "Acquire radio or TV capacity to push narratives over the air."),
    ("T0090", "Create Inauthentic Accounts", "establish-assets",
     "Mass-create fake accounts, personas and bots for later use."),
    ("T0091", "Recruit Malign Actors", "establish-assets",
     "Bring in partisans, trolls or contractors who knowingly participate."),
    ("T0092", "Build Network", "establish-assets",
     "Assemble owned and allied accounts into a coordinated network."),
    ("T0093", "Acquire or Compromise Network", "establish-assets",
     "Buy, rent or take over existing account networks and their audiences."),
    ("T0094", "Infiltrate Existing Networks", "establish-assets",
     "Place personas inside organic communities to steer them from within."),
    ("T0095", "Develop Owned Media Assets", "establish-assets",
     "Operate outlets the campaign fully controls across many formats."),
    ("T0096", "Leverage Content Farms", "establish-assets",
     "Contract content mills to produce volume on demand."),
    # TA16 Establish Legitimacy
    ("T0009", "Create Fake Experts", "establish-legitimacy",
     "Invent credentialed-looking voices whose authority is manufactured."),
    ("T0011", "Compromise Legitimate Accounts", "establish-legitimacy",
     "Hijack real accounts to speak with someone else's credibility."),
    ("T0097", "Create Personas", "establish-legitimacy",
     "Craft detailed false identities with histories that survive scrutiny."),
    ("T0098", "Establish Inauthentic News Sites", "establish-legitimacy",
     "Run fabricated outlets that mimic journalistic form and branding."),
    ("T0099", "Impersonate Legitimate Entities", "establish-legitimacy",
     "Pose as existing institutions, officials or outlets."),
    ("T0100", "Co-Opt Trusted Sources", "establish-legitimacy",
     "Recruit or subvert voices the audience already trusts."),
    # TA05 Microtarget
    ("T0018", "Purchase Targeted Advertisements", "microtarget",
     "Buy ad delivery against narrow demographic or behavioral segments."),
    ("T0101", "Create Localized Content", "microtarget",
     "Adapt material to local language, idiom and grievances."),
    ("T0102", "Leverage Echo Chambers and Filter Bubbles", "microtarget",
     "Seed content into closed loops where it reverberates unchallenged."),
    # TA07 Select Channels and Affordances
    ("T0029", "Online Polls", "select-channels-and-affordances",
     "Use polls to manufacture apparent majorities and engagement."),
    ("T0043", "Chat Apps", "select-channels-and-affordances",
     "Distribute through messaging apps, including encrypted ones."),
    ("T0103", "Livestream", "select-channels-and-affordances",
     "Use live video and audio streams to reach audiences in real time."),
    ("T0104", "Social Networks", "select-channels-and-affordances",
     "Operate on mainstream and alternative social platforms."),
    ("T0105", "Media Sharing Networks", "select-channels-and-affordances",
     "Distribute through photo, video and audio sharing platforms."),
    ("T0106", "Discussion Forums", "select-channels-and-affordances",
     "Work forums and message boards where threads shape opinion."),
    ("T0107", "Bookmarking and Content Curation", "select-channels-and-affordances",
     "Exploit curation platforms to launder links and boost salience."),
    ("T0108", "Blogging and Publishing Networks", "select-channels-and-affordances",
     "Publish through blog and self-publishing platforms."),
    ("T0109", "Consumer Review Networks", "select-channels-and-affordances",
     "Manipulate ratings and reviews to punish or promote targets."),
    ("T0110", "Formal Diplomatic Channels", "select-channels-and-affordances",
     "Push narratives through official state organs: ministries, embassies and spokespeople."),
    ("T0111", "Traditional Media", "select-channels-and-affordances",
     "Place narratives in print, radio and television coverage."),
    ("T0112", "Email", "select-channels-and-affordances",
     "Deliver narratives directly to inboxes via mailing lists and spam."),
    # TA08 Conduct Pump Priming
    ("T0020", "Trial Content", "conduct-pump-priming",
     "A/B test messages on small audiences before committing spend."),
    ("T0039", "Bait Legitimate Influencers", "conduct-pump-priming",
     "Maneuver credible voices into amplifying campaign content themselves."),
    ("T0042", "Seed Kernel of Truth", "conduct-pump-priming",
     "Wrap falsehoods around a verifiable core to make them stick."),
    ("T0044", "Seed Distortions", "conduct-pump-priming",
     "Plant early misframings that later coverage inherits."),
    ("T0045", "Use Fake Experts", "conduct-pump-priming",
     "Deploy manufactured experts to lend borrowed authority."),
    ("T0046", "Use Search Engine Optimization", "conduct-pump-priming",
     "Tune content so search ranks it ahead of authoritative sources."),
    # TA09 Deliver Content
    ("T0114", "Deliver Ads", "deliver-content",
     "Push campaign content to audiences through paid ad placement."),
    ("T0115", "Post Content", "deliver-content",
     "Publish campaign material directly on selected channels."),
    ("T0116", "Comment or Reply on Content", "deliver-content",
     "Steer threads through coordinated comments and replies."),
    ("T0117", "Attract Traditional Media", "deliver-content",
     "Engineer moments mainstream media will cover on its own."),
    # TA17 Maximize Exposure
    ("T0049", "Flood Information Space", "maximize-exposure",
     "Post at volume to dominate feeds, hashtags and reply sections."),
    ("T0118", "Amplify Existing Narrative", "maximize-exposure",
     "Boost organic content that already serves campaign goals."),
    ("T0119", "Cross-Posting", "maximize-exposure",
     "Repost the same content across platforms, groups and personas."),
    ("T0120", "Incentivize Sharing", "maximize-exposure",
     "Reward audiences for spreading content onward."),
    ("T0121", "Manipulate Platform Algorithm", "maximize-exposure",
     "Game ranking and recommendation systems to widen reach."),
    ("T0122", "Direct Users to Alternative Platforms", "maximize-exposure",
     "Herd audiences toward spaces with friendlier moderation."),
    # TA18 Drive Online Harms
    ("T0047", "Censor Social Media as a Political Force", "drive-online-harms",
     "Use state or mob pressure to silence speech on platforms."),
    ("T0048", "Harass", "drive-online-harms",
     "Coordinate abuse against individuals or communities to exhaust and silence them."),
    ("T0123", "Control Information Environment through Offensive Cyberspace Operations", "drive-online-harms",
     "Use intrusions and attacks to shape what information can circulate."),
    ("T0124", "Suppress Opposition", "drive-online-harms",
     "Target opposing voices with takedowns, brigading and legal threats."),
    ("T0125", "Platform Filtering", "drive-online-harms",
     "Exploit moderation tooling to remove or bury opposing content."),
    # TA10 Drive Offline Activity
    ("T0017", "Conduct Fundraising", "drive-offline-activity",
     "Convert online support into money that funds further operations."),
    ("T0057", "Organize Events", "drive-offline-activity",
     "Call rallies, protests and meetups from online audiences."),
    ("T0061", "Sell Merchandise", "drive-offline-activity",
     "Move branded goods that fund and advertise the movement."),
    ("T0126", "Encourage Attendance at Events", "drive-offline-activity",
     "Mobilize audiences to show up at planned gatherings."),
    ("T0127", "Physical Violence", "drive-offline-activity",
     "Steer audiences toward intimidation or violence offline."),
    # TA11 Persist in the Information Environment
    ("T0128", "Conceal Information Assets", "persist-in-the-information-environment",
     "Hide ownership and operation of accounts, sites and infrastructure."),
    ("T0129", "Conceal Operational Activity", "persist-in-the-information-environment",
     "Obscure coordination so activity reads as organic."),
    ("T0130", "Conceal Infrastructure", "persist-in-the-information-environment",
     "Launder hosting, domains and payment trails behind fronts."),
    ("T0131", "Exploit Terms of Service and Content Moderation", "persist-in-the-information-environment",
     "Ride the edges of platform rules to avoid enforcement."),
    # TA12 Assess Effectiveness
    ("T0132", "Measure Performance", "assess-effectiveness",
     "Track output metrics: posts made, accounts run, spend delivered."),
    ("T0133", "Measure Effectiveness", "assess-effectiveness",
     "Assess whether audience beliefs or behavior actually moved."),
    ("T0134", "Measure Effectiveness Indicators", "assess-effectiveness",
     "Watch proxy signals (reach, engagement, sentiment) tied to outcomes."),
)


def technique_object(code: str, name: str, tactic: str, description: str) -> dict:
    return {
        "type": "attack-pattern",
        "spec_version": "2.1",
        "id": f"attack-pattern--{uuid.uuid5(FIXTURE_NS, f'disarm|{code}')}",
        "created": STAMP,
        "modified": STAMP,
        "name": name,
        "description": description,
        "external_references": [
            {
                "source_name": "DISARM",
                "external_id": code,
                "url": f"{GITHUB}/techniques/{code}.md",
            }
        ],
        "kill_chain_phases": [
            {"kill_chain_name": "disarm", "phase_name": tactic}
        ],
    }


def build_bundle() -> dict:
    objects = [
        {
            "type": "identity",
            "spec_version": "2.1",
            "id": f"identity--{uuid.uuid5(FIXTURE_NS, 'disarm|identity')}",
            "created": STAMP,
            "modified": STAMP,
            "name": SNAPSHOT_VERSION,
            "identity_class": "organization",
        },
        # A marking statement rides along, as in real framework dumps; the
        # loader must ignore it.
        {
            "type": "marking-definition",
            "spec_version": "2.1",
            "id": f"marking-definition--{uuid.uuid5(FIXTURE_NS, 'disarm|marking')}",
            "created": STAMP,
            "definition_type": "statement",
            "definition": {"statement": "CC-BY-4.0"},
        },
    ]
    objects += [technique_object(*row) for row in TECHNIQUES]
    # One stray pattern without a DISARM code: loaders must skip it, not
    # crash on it.
    objects.append(
        {
            "type": "attack-pattern",
            "spec_version": "2.1",
            "id": f"attack-pattern--{uuid.uuid5(FIXTURE_NS, 'stray|T1583')}",
            "created": STAMP,
            "modified": STAMP,
            "name": "Acquire Infrastructure",
            "external_references": [
                {"source_name": "mitre-attack", "external_id": "T1583"}
            ],
        }
    )
    return {
        "type": "bundle",
        "id": f"bundle--{uuid.uuid5(FIXTURE_NS, 'disarm|bundle')}",
        "objects": objects,
    }


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "disinfo_exchange" / "data" / "disarm_snapshot.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(build_bundle(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    out.write_text(payload, encoding="utf-8")
    print(f"wrote {out} ({len(TECHNIQUES)} techniques)")


if __name__ == "__main__":
    main()
