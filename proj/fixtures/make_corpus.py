#!/usr/bin/env python3
# Copyright 2026 The adaudit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates fixtures/corpus. Output is deterministic; rerun after edits."""

import json
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent / "corpus"
WEB = ROOT / "web"

GOOGLE_ID = "pub-3176064900167527"

# Sites sharing one google.com DIRECT id.
GOOGLE_POOL = [
    "sputniknews.com", "ria.ru", "snanews.de", "inosmi.ru", "sputnik.by",
    "sputnik.kz", "sputnik.az", "sputniknews.cn", "sputniknews.gr",
    "sputniknews.lt", "sputnik-abkhazia.info", "sputnik-ossetia.ru",
    "ukraina.ru", "baltnews.lt",
]
MISINFORMATION = ["sputniknews.com", "ria.ru", "snanews.de",
                  "dailyconspiracy.net", "truthbomb-news.com",
                  "covidhoax-report.org"]
PIRACY = ["mangaread.org", "freestreams-hd.net"]
ILLEGAL = ["pillshop-noscript.biz"]

SHARED_SITES = ["gbnews.uk", "gbnews.com", "newscientist.com"]
SPOTX_ID = "230421"
SOVRN_ID = "277512"

KIOSKED_ID = "56848"
KIOSKED_SITES = [
    "helsingin-uutiset.fi", "turku-daily.fi", "nordic-recipes.com",
    "oulu-sports.fi", "lapland-travel.net", "finnish-games.com",
    "arctic-weather.org", "baltic-business.net", "espoo-local.fi",
    "tampere-tech.com", "suomi-music.net", "kuopio-news.fi",
]

COPYCATS = ["adsense-partners.net", "google-adexchange.org", "realtime-bids.info"]


def write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def ads_txt(lines):
    return "\n".join(lines) + "\n"


def sellers(entries, contact="", version="1.0"):
    doc = {"version": version}
    if contact:
        doc["contact_email"] = contact
    doc["sellers"] = entries
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def entry(seller_id, seller_type, domain=None, name=None, confidential=False):
    e = {"seller_id": seller_id, "seller_type": seller_type}
    if confidential:
        e["is_confidential"] = 1
    if name:
        e["name"] = name
    if domain:
        e["domain"] = domain
    return e


def main() -> None:
    if ROOT.exists():
        shutil.rmtree(ROOT)
    ads = {}

    for i, site in enumerate(GOOGLE_POOL):
        ads[site] = [
            "# ads.txt",
            f"google.com, {GOOGLE_ID}, DIRECT, f08c47fec0942fa0",
            f"pubmatic.com, {156100 + i}, RESELLER, 5d62403b186f2ace",
        ]
    for i, site in enumerate(SHARED_SITES):
        ads[site] = [
            f"spotx.tv, {SPOTX_ID}, DIRECT, 7842df1d2fe2db34",
            f"sovrn.com, {SOVRN_ID}, DIRECT, fafdf38b16bf6b2b",
            f"google.com, pub-90000000000000{i:02d}, DIRECT, f08c47fec0942fa0",
            f"pubmatic.com, {157000 + i}, RESELLER",
        ]
    ads["mangaread.org"] = [
        "beachfront.com, 13310, DIRECT",
        "google.com, pub-5551234567890123, DIRECT, f08c47fec0942fa0",
        "pubmatic.com, 158000, RESELLER",
        "contact=ads@mangaread.org",
    ]
    for i, site in enumerate(KIOSKED_SITES):
        ads[site] = [
            f"yahoo.com, {KIOSKED_ID}, DIRECT",
            f"kiosked.com, KS{i:04d}, DIRECT",
            f"google.com, pub-70000000000000{i:02d}, DIRECT",
        ]
    # Sites with imperfect files for the parser and failure paths.
    ads["freestreams-hd.net"] = [
        "smaato.com, 1100042000, DIRECT",
        "this line is broken",
        "adyoulike.com, ayl-77, RESELLR",
    ]
    ads["truthbomb-news.com"] = ["smaato.com, 1100042001, DIRECT"]

    for site, lines in ads.items():
        write(WEB / site / "ads.txt", ads_txt(lines))

    # Seeds that fail.
    write(WEB / "slow-publisher.com" / "meta", "ads.txt status=timeout\n")
    write(WEB / "binary-publisher.com" / "meta", "ads.txt status=non_text\n")
    write(WEB / "moved-publisher.com" / "meta",
          "ads.txt redirect=https://moved-publisher.com/v2/ads.txt\n")
    write(WEB / "moved-publisher.com" / "v2" / "ads.txt",
          ads_txt(["google.com, pub-6660000000000001, DIRECT"]))
    write(WEB / "empty-host.com" / "index.html", "<html></html>\n")

    # Networks.
    write(WEB / "spotx.tv" / "sellers.json", sellers([
        entry(SPOTX_ID, "PUBLISHER", "gbnews.com", "GB News"),
        entry("230500", "INTERMEDIARY", "pubmatic.com", "PubMatic"),
        entry("230501", "PUBLISHER", confidential=True),
    ], "sellers@spotx.tv"))
    write(WEB / "sovrn.com" / "sellers.json", sellers([
        entry(SOVRN_ID, "PUBLISHER", "newscientist.com", "New Scientist"),
        entry("277600", "PUBLISHER", confidential=True),
        entry("277601", "PUBLISHER", confidential=True),
        entry("277602", "PUBLISHER", confidential=True),
    ], "sellers@sovrn.com"))

    pubmatic = [entry(str(156100 + i), "INTERMEDIARY", f"reseller{i}.net", f"Reseller {i}")
                for i in range(len(GOOGLE_POOL))]
    pubmatic += [entry(str(157000 + i), "INTERMEDIARY", "gbresell.net", "GB Resell")
                 for i in range(len(SHARED_SITES))]
    pubmatic += [
        entry("158000", "INTERMEDIARY", "mangaresell.net", "Manga Resell"),
        entry("159000", "INTERMEDIARY", "smaato.com", "Smaato"),
        entry("159001", "INTERMEDIARY", "ghostexchange.net", "Ghost Exchange"),
        entry("159002", "INTERMEDIARY", "brokenads.net", "Broken Ads"),
        entry("159003", "PUBLISHER", confidential=True),
    ]
    write(WEB / "pubmatic.com" / "sellers.json", sellers(pubmatic, "sellers@pubmatic.com"))

    write(WEB / "beachfront.com" / "sellers.json", sellers([
        entry("13310", "INTERMEDIARY", "videoresell.com", "Video Resell Inc"),
        entry("13311", "PUBLISHER", "animefan.net", "Anime Fan"),
    ], "sellers@beachfront.com"))

    smaato_clients = [
        entry("1100042000", "PUBLISHER", "freestreams-hd.net", "Free Streams"),
        entry("1100042001", "PUBLISHER", "truthbomb-news.com", "Truthbomb"),
        entry("1100042002", "PUBLISHER", "dailyconspiracy.net", "Daily Conspiracy"),
        entry("1100042003", "PUBLISHER", "weather-widgets.app", "Weather Widgets"),
        entry("1100042004", "PUBLISHER", confidential=True),
    ]
    write(WEB / "smaato.com" / "sellers.json", sellers(smaato_clients, "sellers@smaato.com"))
    for net, sid in [("keenkale.com", "KK-311"), ("lkqd.com", "512"), ("adingo.jp", "smaato_jp")]:
        write(WEB / net / "sellers.json", sellers([
            entry(sid, "PUBLISHER", "smaato.com", "Smaato Inc"),
            entry(f"{sid}-2", "PUBLISHER", f"client-of-{net.split('.')[0]}.com", "Client"),
        ], f"sellers@{net}"))

    write(WEB / "yahoo.com" / "sellers.json", sellers([
        entry(KIOSKED_ID, "PUBLISHER", "kiosked.com", "Kiosked Ltd"),
        entry("56849", "PUBLISHER", "yahoo-news.example.com", "Yahoo News"),
        entry("56850", "INTERMEDIARY", "pubmatic.com", "PubMatic"),
    ], "sellers@yahoo.com"))
    write(WEB / "kiosked.com" / "sellers.json", sellers(
        [entry(f"KS{i:04d}", "PUBLISHER", site, site) for i, site in enumerate(KIOSKED_SITES)],
        "sellers@kiosked.com"))

    # One domain claimed under several names.
    write(WEB / "adyoulike.com" / "sellers.json", sellers([
        entry("ayl-10", "PUBLISHER", "facebook.com", "Facebook"),
        entry("ayl-11", "PUBLISHER", "facebook.com", "Meta Audience Network"),
        entry("ayl-12", "PUBLISHER", "facebook.com", "FB Ads Partner"),
        entry("ayl-77", "PUBLISHER", "freestreams-hd.net", "Free Streams"),
    ], "sellers@adyoulike.com"))

    # Every entry confidential.
    write(WEB / "mytarget.com" / "sellers.json", sellers(
        [entry(f"mt-{i}", "PUBLISHER", confidential=True) for i in range(4)],
        "sellers@mytarget.com"))

    write(WEB / "brokenads.net" / "sellers.json", "<html><body>Not here</body></html>\n")

    google_like = sellers([
        entry("pub-1000000000000001", "PUBLISHER", "example-news.com", "Example News"),
        entry("pub-1000000000000002", "INTERMEDIARY", "example-exchange.com", "Example Exchange"),
        entry("pub-1000000000000003", "PUBLISHER", confidential=True),
    ], "sellers@google.com")
    for d in COPYCATS:
        write(WEB / d / "sellers.json", google_like)

    seeds = list(ads) + ["slow-publisher.com", "binary-publisher.com",
                         "moved-publisher.com", "empty-host.com", "unreachable-site.com"]
    write(ROOT / "seeds.csv", "".join(f"{i + 1},{d}\n" for i, d in enumerate(seeds)))
    sellers_seeds = ["keenkale.com", "lkqd.com", "adingo.jp", "adyoulike.com",
                     "mytarget.com"] + COPYCATS
    write(ROOT / "sellers_seeds.txt", "\n".join(sellers_seeds) + "\n")

    lists = ROOT / "lists"
    write(lists / "misinformation.txt", "# fake news\n" + "\n".join(MISINFORMATION) + "\n")
    write(lists / "piracy.txt", "# piracy\n" + "\n".join(PIRACY) + "\n")
    write(lists / "illegal.txt", "# illegal goods\n" + "\n".join(ILLEGAL) + "\n")
    verified = ["smaato.com", "kiosked.com", "pubmatic.com", "spotx.tv", "sovrn.com",
                "beachfront.com", "yahoo.com", "google.com", "adyoulike.com",
                "lkqd.com", "keenkale.com", "adingo.jp"]
    write(lists / "verified_networks.txt", "\n".join(verified) + "\n")

    ranked = GOOGLE_POOL + SHARED_SITES + KIOSKED_SITES + ["mangaread.org"]
    ranked.sort()
    write(ROOT / "tranco.csv",
          "".join(f"{(i + 1) * 37},{d}\n" for i, d in enumerate(ranked)))

    whois = ROOT / "whois"
    rossiya = "Rossiya Segodnya"
    owners = {d: rossiya for d in GOOGLE_POOL}
    owners["sputniknews.com"] = None          # redacted
    owners.pop("snanews.de")                  # no record
    owners["gbnews.uk"] = "GB News Limited"
    owners["gbnews.com"] = "GB  News Limited"
    owners["newscientist.com"] = "New Scientist Ltd"
    kiosk_orgs = ["Uutiset Oy", "Turku Media Oy", "Nordic Recipes AB", "Oulu Sports Ry",
                  None, "Finnish Games Oy", "Arctic Weather Ltd", None,
                  "Espoo Local Oy", "Tampere Tech Oy", "Suomi Music Oy", "Kuopio News Oy"]
    owners.update(zip(KIOSKED_SITES, kiosk_orgs))
    owners["mangaread.org"] = None
    for d, org in owners.items():
        if org is None:
            text = (f"Domain Name: {d.upper()}\nRegistrar: NameCheap, Inc.\n"
                    "Registrant Organization: REDACTED FOR PRIVACY\n"
                    "Registrant Country: IS\n")
        elif d.endswith(".ru"):
            text = (f"domain:        {d.upper()}\nnserver:       ns1.{d}.\n"
                    f"org:           {org}\nregistrar:     RU-CENTER-RU\n")
        elif d.endswith(".uk"):
            text = (f"    Domain name:\n        {d}\n\n"
                    f"    Registrant:\n        {org}\n\n"
                    "    Registrant type:\n        UK Limited Company\n")
        else:
            text = (f"Domain Name: {d.upper()}\nRegistrar: Example Registrar\n"
                    f"Registrant Organization: {org}\nRegistrant Country: FI\n")
        write(whois / f"{d}.txt", text)


if __name__ == "__main__":
    main()
