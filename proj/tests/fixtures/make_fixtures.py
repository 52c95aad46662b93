#!/usr/bin/env python3
# Copyright 2026 The Kotoba Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the test fixtures in this directory.

Every file is a deterministic function of this script. Expected values
(manifest counts, Jaccard similarities, ROUGE-2 scores, eval results) are
computed here, independently of the C++ code under test.

Usage: python3 make_fixtures.py [output_dir]
"""

import itertools
import json
import os
import random
import sys
import unicodedata

OUT = os.path.abspath(sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(__file__))


def write(name, text):
    path = os.path.join(OUT, name)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def write_jsonl(name, rows):
    write(name, "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows))


def write_json(name, obj):
    write(name, json.dumps(obj, ensure_ascii=False, indent=2) + "\n")


# ---------------------------------------------------------------------------
# Japanese sentence pool

TIMES = ["昨日", "今年の春に", "先週の会議で", "毎朝", "週末には", "去年の夏",
         "来月から", "今日の午後", "先月の終わりに", "夜遅くまで", "朝早くから",
         "この十年で", "年末までに", "休みの日に", "雨の日には", "最近になって",
         "長い間", "明日の朝", "今回の調査で", "数年前から"]
SUBJECTS = ["東京の会社", "私の友人", "地方の図書館", "新しい研究所", "市役所の担当者",
            "小さな書店", "大学の先生", "近所のパン屋", "地元の農家", "若い技術者",
            "病院の医師", "駅前の喫茶店", "高校の生徒たち", "旅行会社の社員", "町内会の会長",
            "博物館の学芸員", "鉄道会社", "新聞の記者", "料理教室の講師", "中学校の校長",
            "京都の寺", "北海道の牧場", "大阪の商店街", "沖縄の漁師", "名古屋の工場",
            "九州の温泉旅館", "山奥の村", "海沿いの町", "県の観光協会", "放送局の番組担当"]
OBJECTS = ["新しい製品", "地域の歴史", "環境問題", "交通機関の改善", "季節の料理",
           "子どもの教育", "伝統的な祭り", "古い建物の保存", "災害への備え", "観光客の増加",
           "森林の管理", "水道の整備", "高齢者の暮らし", "地元の特産品", "図書の電子化",
           "星の観察", "川の生き物", "日本語の方言", "昔の写真", "音楽の授業",
           "野菜の育て方", "海の温度", "町の人口", "働き方の変化", "新しい駅の建設",
           "茶道の作法", "桜の開花", "米作りの技術", "空き家の活用", "自転車の安全"]
VERBS = ["について説明しました", "を紹介しています", "に関する調査を行った",
         "を詳しく調べている", "の計画を発表した", "について話し合った",
         "を特集した記事を書いた", "の展示を始めた", "に取り組んでいる",
         "の資料をまとめた", "について意見を集めた", "の記録を残している",
         "を学ぶ講座を開いた", "に注目している", "の報告書を公開した",
         "について考える会を開いた", "を見直すことにした", "の説明会を開いた",
         "を体験する催しを企画した", "の成果を発表した"]
REASONS = ["多くの人が関心を持っているためです", "利用者の意見を反映するためだ",
           "将来に向けた準備が必要だからです", "地域の活性化につながると考えたためだ",
           "専門家の助言を受けたからです", "次の世代に伝えたいという思いがある",
           "住民の生活を守るためだという", "予算の見直しが求められている",
           "新しい技術が役に立つと期待されている", "参加者からの評判がよかった"]
TAILS = ["参加者は熱心に話を聞いていた", "今後も活動を続ける予定だ",
         "詳しい内容は来月に公表される", "関係者は結果に満足している",
         "課題もまだ残っているという", "多くの反響が寄せられた",
         "次回は秋に開かれる見込みだ", "準備には半年ほどかかった",
         "会場には家族連れの姿も見られた", "担当者は手応えを感じている"]


def ja_sentence(rng):
    form = rng.randrange(4)
    t, s, o, v = rng.choice(TIMES), rng.choice(SUBJECTS), rng.choice(OBJECTS), rng.choice(VERBS)
    if form == 0:
        return f"{t}、{s}は{o}{v}。"
    if form == 1:
        return f"{s}は{t}{o}{v}。{rng.choice(TAILS)}。"
    if form == 2:
        return f"{t}、{s}が{o}{v}のは、{rng.choice(REASONS)}。"
    return f"{s}によると、{o}{v}という。{rng.choice(TAILS)}。"


def ja_paragraph(rng, sentences):
    return "".join(ja_sentence(rng) for _ in range(sentences))


EN_SUBJECTS = ["The city council", "A local bakery", "The research team", "Our neighbor",
               "The museum", "A small bookstore", "The school board", "The train company",
               "A young engineer", "The farmers market", "The library", "The hospital"]
EN_VERBS = ["announced a plan for", "published a report on", "held a meeting about",
            "started a project on", "collected opinions about", "wrote an article about",
            "opened an exhibit on", "reviewed the budget for"]
EN_OBJECTS = ["public transport", "the river cleanup", "school lunches", "the old bridge",
              "local history", "bicycle safety", "the summer festival", "water quality",
              "new housing", "the town archive", "street lighting", "recycling"]
EN_TAILS = ["Residents welcomed the news.", "More details will follow next month.",
            "The plan still needs approval.", "Many people attended the event.",
            "The work will take about a year.", "Officials expect strong interest."]


def en_sentence(rng):
    return (f"{rng.choice(EN_SUBJECTS)} {rng.choice(EN_VERBS)} {rng.choice(EN_OBJECTS)}. "
            f"{rng.choice(EN_TAILS)}")


def en_paragraph(rng, sentences):
    return " ".join(en_sentence(rng) for _ in range(sentences))


def nfkc(text):
    return unicodedata.normalize("NFKC", text)


# ---------------------------------------------------------------------------
# Reference implementations used only to compute expected values

def normalize_text(text):
    """Mirror of the pipeline's normalization for the characters used here."""
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    text = "".join(c for c in text if c in "\t\n" or unicodedata.category(c) != "Cc")
    text = nfkc(text)
    lines = [line.strip() for line in text.split("\n")]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    out, blank = [], 0
    for line in lines:
        blank = blank + 1 if not line else 0
        if blank > 2:
            continue
        out.append(line)
    return "\n".join(out)


def shingles(text, n=5):
    return {text[i:i + n] for i in range(len(text) - n + 1)}


def jaccard(a, b, n=5):
    sa, sb = shingles(a, n), shingles(b, n)
    if not sa and not sb:
        return 1.0
    return len(sa & sb) / len(sa | sb)


def rouge2(hyp, ref, mode):
    def units(t):
        if mode == "char":
            return [c for c in t if not c.isspace()]
        return t.split()

    def bigrams(u):
        counts = {}
        for pair in zip(u, u[1:]):
            counts[pair] = counts.get(pair, 0) + 1
        return counts

    h, r = units(hyp), units(ref)
    if len(h) < 2 or len(r) < 2:
        return 0.0
    hb, rb = bigrams(h), bigrams(r)
    overlap = sum(min(c, rb.get(k, 0)) for k, c in hb.items())
    if overlap == 0:
        return 0.0
    p = overlap / (len(h) - 1)
    rc = overlap / (len(r) - 1)
    return 2 * p * rc / (p + rc)


# ---------------------------------------------------------------------------
# Tokenizer corpora

def make_corpora():
    rng = random.Random(101)
    lines = []
    size = 0
    while size < 60000:
        line = ja_paragraph(rng, rng.randint(3, 7))
        lines.append(line)
        size += len(line.encode("utf-8")) + 1
    write("ja_corpus.txt", "\n".join(lines) + "\n")

    rng = random.Random(202)
    sample = [ja_paragraph(rng, rng.randint(3, 7)) for _ in range(120)]
    write("ja_sample.txt", "\n".join(sample) + "\n")

    rng = random.Random(303)
    en = [en_paragraph(rng, rng.randint(2, 5)) for _ in range(200)]
    write("en_corpus.txt", "\n".join(en) + "\n")


# ---------------------------------------------------------------------------
# Pipeline fixture with a hand-audited composition

SYMBOLS = "★☆♪→←↑↓■□◆◇○●△▲▽▼♠♣♥♦♂♀"


def make_pipeline():
    rng = random.Random(404)
    docs = []  # (id, text, role)

    clean = []
    used = set()
    while len(clean) < 75:
        if len(clean) % 10 == 9:
            text = en_paragraph(rng, rng.randint(3, 5))
        else:
            text = "\n".join(ja_paragraph(rng, rng.randint(2, 3)) for _ in range(rng.randint(2, 4)))
        if text in used or len(text) < 120:
            continue
        used.add(text)
        clean.append(text)

    # Five clean documents carry one PII string each.
    pii = {
        3: ("お問い合わせは info@example.co.jp までご連絡ください。", {"email": 1}),
        11: ("受付の電話番号は 03-1234-5678 です。", {"phone": 1}),
        22: ("担当者の直通 +81-3-9876-5432 に連絡してください。", {"phone": 1}),
        37: ("詳しくは press@town-office.jp へ。", {"email": 1}),
        48: ("資料は yamada.taro+news@mail.example.com に届きます。", {"email": 1}),
    }
    for index, (sentence, _) in pii.items():
        clean[index] = clean[index] + "\n" + sentence

    # Some clean documents arrive unnormalized.
    clean[27] += "\nABC123の記録です。"
    clean[60] += "\n\n\n追記はありません。"
    unnormalized = {
        5: lambda t: t.replace("\n", "\r\n"),
        14: lambda t: "  " + t + "  \n\n\n",
        27: lambda t: t.replace("ABC123", "ＡＢＣ１２３"),
        41: lambda t: t.replace("\n", "\t \n") + " ",
        60: lambda t: t.replace("\n\n\n追記", "\n\n\n\n\n\n追記"),
    }
    raw_clean = list(clean)
    for index, fn in unnormalized.items():
        raw_clean[index] = fn(clean[index])

    for i, text in enumerate(raw_clean):
        docs.append([f"clean-{i:02d}", text, "clean"])

    # Exact duplicates: five byte copies, five that only match after
    # normalization.
    plain = [i for i in range(75) if i not in pii and i not in unnormalized]
    exact_sources = plain[:10]
    for k, src in enumerate(exact_sources):
        text = raw_clean[src]
        if k >= 5:
            text = text + "\n" if k % 2 else text.replace("\n", "\r\n") + "\r\n"
        docs.append([f"exact-{k:02d}", text, f"exact:{src}"])

    # Near duplicates: an original with one short sentence appended.
    near_sources = plain[10:15]
    tails = ["以上です。", "終わり。", "また次回。", "なお雨天決行。", "追って連絡する。"]
    for k, src in enumerate(near_sources):
        docs.append([f"near-{k:02d}", clean[src] + tails[k], f"near:{src}"])

    # Heuristic junk.
    junk = [
        ("junk-short-0", "短い文です。", "min length"),
        ("junk-short-1", "本日は晴天なり。", "min length"),
        ("junk-short-2", "Click here.", "min length"),
        ("junk-short-3", "詳細は後日お知らせします。", "min length"),
    ]
    for k in range(3):
        r = random.Random(500 + k)
        text = "".join(r.choice(SYMBOLS) for _ in range(70)) + "セール"
        junk.append((f"junk-symbol-{k}", text, "symbol ratio"))
    for k, base in enumerate(["あいうえお", "安い安い今すぐ", "buy now "]):
        junk.append((f"junk-repeat-{k}", (base * 40).strip(), "repetition"))
    for doc_id, text, rule in junk:
        docs.append([doc_id, text, "junk:" + rule])

    # Deterministic interleaving; every duplicate lands after its source.
    order = list(range(len(docs)))
    r = random.Random(606)
    r.shuffle(order)
    pos = {i: p for p, i in enumerate(order)}
    by_id = {d[0]: i for i, d in enumerate(docs)}
    for i, d in enumerate(docs):
        role = d[2]
        if role.startswith(("exact:", "near:")):
            src = by_id[f"clean-{int(role.split(':')[1]):02d}"]
            if pos[i] < pos[src]:
                pos[i], pos[src] = pos[src], pos[i]
    order = sorted(range(len(docs)), key=lambda i: pos[i])
    docs = [docs[i] for i in order]
    assert len(docs) == 100

    # Audit the composition with the reference implementations.
    normalized = {d[0]: normalize_text(d[1]) for d in docs}
    for i, text in enumerate(clean):
        assert normalized[f"clean-{i:02d}"] == text, i
    modified = sum(1 for d in docs if normalized[d[0]] != d[1])
    for d in docs:
        if d[2].startswith("exact:"):
            src = f"clean-{int(d[2].split(':')[1]):02d}"
            assert normalized[d[0]] == normalized[src]
    survivors = [d[0] for d in docs if d[2] == "clean"]
    texts = [normalized[s] for s in survivors]
    worst = max(jaccard(a, b) for a, b in itertools.combinations(texts, 2))
    assert worst < 0.5, worst
    near_j = []
    for d in docs:
        if d[2].startswith("near:"):
            src = f"clean-{int(d[2].split(':')[1]):02d}"
            near_j.append(jaccard(normalized[d[0]], normalized[src]))
            assert near_j[-1] >= 0.9, near_j[-1]
            others = [jaccard(normalized[d[0]], t) for s, t in zip(survivors, texts) if s != src]
            assert max(others) < 0.5

    emails = sum(c.get("email", 0) for _, c in pii.values())
    phones = sum(c.get("phone", 0) for _, c in pii.values())
    manifest = {
        "documents_in": 100,
        "decode_failures": 0,
        "stages": {
            "normalize": {"seen": 100, "kept": 100, "dropped": 0, "modified": modified},
            "pii": {"seen": 100, "kept": 100, "dropped": 0, "modified": 5},
            "exact_dedup": {"seen": 100, "kept": 90, "dropped": 10, "modified": 0},
            "near_dedup": {"seen": 90, "kept": 85, "dropped": 5, "modified": 0},
            "heuristics": {"seen": 85, "kept": 75, "dropped": 10, "modified": 0,
                           "drop_rules": {"min length": 4, "symbol ratio": 3, "repetition": 3}},
            "classifier": {"seen": 75, "kept": 75, "dropped": 0, "modified": 0},
        },
        "redactions": {"email": emails, "phone": phones},
        "total_documents_out": 75,
        "survivors": survivors,
        "exact_duplicates": {d[0]: f"clean-{int(d[2].split(':')[1]):02d}"
                             for d in docs if d[2].startswith("exact:")},
        "near_duplicates": {d[0]: f"clean-{int(d[2].split(':')[1]):02d}"
                            for d in docs if d[2].startswith("near:")},
        "near_duplicate_min_jaccard": round(min(near_j), 4),
        "max_survivor_jaccard": round(worst, 4),
    }
    write_jsonl("pipeline/docs.jsonl",
                [{"id": d[0], "text": d[1], "meta": {"source": "fixture"}} for d in docs])
    write_json("pipeline/manifest.json", manifest)
    # A hand-set model: penalize symbol-heavy and repetitive text.
    write_json("pipeline/quality_model.json", {
        "version": 1,
        "features": ["symbol_ratio", "repetition_ratio"],
        "weights": [-20.0, -10.0],
        "bias": 4.0,
        "threshold": 0.5,
    })
    write_json("pipeline/config.json", {
        "version": 1,
        "near_dedup": {"shingle_size": 5, "num_permutations": 128, "num_bands": 32,
                       "jaccard_threshold": 0.8},
        "heuristics": {"min_chars": 50, "max_chars": 200000, "max_symbol_ratio": 0.3,
                       "max_repetition_ratio": 0.5},
        "classifier": {"model": "quality_model.json"},
    })


# ---------------------------------------------------------------------------
# Quality classifier data

def bad_document(rng):
    kind = rng.randrange(5)
    if kind == 0:
        words = ["激安", "送料無料", "今すぐ", "限定", "クリック", "最安値", "人気", "在庫処分"]
        return " | ".join(rng.choice(words) for _ in range(rng.randint(12, 30)))
    if kind == 1:
        return " ".join(f"{rng.randint(0, 99999):05d}-{rng.randint(0, 999):03d}"
                        for _ in range(rng.randint(10, 25)))
    if kind == 2:
        phrase = rng.choice(["お得です", "今だけ", "見てね", "最高", "買って"])
        return (phrase + "!") * rng.randint(10, 30)
    if kind == 3:
        return "".join(rng.choice(SYMBOLS + "#$%&*+=<>~^") for _ in range(rng.randint(40, 120)))
    tokens = [rng.choice(OBJECTS) for _ in range(rng.randint(8, 16))]
    return "、".join(tokens) + "、" + "".join(str(rng.randint(0, 9)) for _ in range(30))


def make_quality():
    rng = random.Random(707)
    rows = []
    for i in range(250):
        if i % 2 == 0:
            if rng.random() < 0.2:
                text = en_paragraph(rng, rng.randint(2, 4))
            else:
                text = ja_paragraph(rng, rng.randint(2, 6))
            rows.append({"text": text, "label": 1})
        else:
            rows.append({"text": bad_document(rng), "label": 0})
    rng.shuffle(rows)
    write_jsonl("quality/train.jsonl", rows[:200])
    write_jsonl("quality/heldout.jsonl", rows[200:])


# ---------------------------------------------------------------------------
# PII cases (hand-labeled)

PII_CASES = [
    # positives: (text, category)
    ("contact: foo@bar.com", "email"),
    ("メールは taro.yamada@example.co.jp までお願いします。", "email"),
    ("Send it to a_b-c%d+e@sub-domain.example.org today.", "email"),
    ("宛先:support@kotoba.dev", "email"),
    ("(hanako@example.jp)", "email"),
    ("Reply to USER.NAME@EXAMPLE.COM please.", "email"),
    ("お問い合わせ先 info@shop.example.net 担当 鈴木", "email"),
    ("tel: 090-1234-5678", "phone"),
    ("携帯は08012345678です。", "phone"),
    ("電話 070 1111 2222 まで", "phone"),
    ("代表番号:03-1234-5678", "phone"),
    ("大阪支店 06 9876 5432", "phone"),
    ("FAX 0451234567", "phone"),
    ("Call +81-90-1234-5678 now", "phone"),
    ("US office: +1 415 555 0100", "phone"),
    ("国際電話 +44 20 7946 0958 へ", "phone"),
    ("+81312345678 に連絡", "phone"),
    ("問い合わせ(03-5555-1234)", "phone"),
    ("携帯:090-9999-0000、メール:x@y.jp", "phone"),
    ("緊急時は 050-1234-5678 へ", "phone"),
    # negatives
    ("会議は2024-01-15に開催されます。", None),
    ("バージョン 1.2.3 をリリースしました。", None),
    ("価格は1,234円です。", None),
    ("郵便番号は100-0001です。", None),
    ("ISBN 978-4-06-123456-7 の本", None),
    ("user@localhost に送ってもだめです", None),
    ("foo@bar は不完全なアドレスです", None),
    ("a@b.c は短すぎる", None),
    ("注文番号 12345678901234", None),
    ("時刻は10:30です。", None),
    ("円周率は3.14159です。", None),
    ("@username で呼びかける", None),
    ("日付 2024/01/15", None),
    ("部屋番号 0312 を予約", None),
    ("100% 満足の結果", None),
    ("ID: 0901234 は短い番号", None),
    ("合計 +5 ポイント", None),
    ("座標 35.6895, 139.6917", None),
    ("製品コード AB-1234-5678", None),
    ("電話番号は未定です。", None),
]


def make_pii():
    rows = []
    for i, (text, category) in enumerate(PII_CASES):
        rows.append({"id": f"pii-{i:02d}", "text": text, "positive": category is not None,
                     "category": category})
    assert sum(r["positive"] for r in rows) == 20 and len(rows) == 40
    write_jsonl("pii_cases.jsonl", rows)


# ---------------------------------------------------------------------------
# MinHash pairs with known shingle-set Jaccard

def make_minhash_pairs():
    rng = random.Random(808)
    kanji = [chr(c) for c in range(0x4E00, 0x9FA0)]
    katakana = [chr(c) for c in range(0x30A1, 0x30FB)]
    rows = []
    targets = [0.0] * 3 + [0.3] * 3 + [0.5] * 4 + [0.7] * 4 + [0.9] * 3 + [1.0] * 3
    for k, target in enumerate(targets):
        p = rng.randint(150, 300)
        if target == 0.0:
            a = "".join(rng.choice(kanji) for _ in range(p))
            b = "".join(rng.choice(katakana) for _ in range(p))
        elif target == 1.0:
            a = b = "".join(rng.choice(kanji) for _ in range(p))
        else:
            m = p - 4
            s = round(m * (1 - target) / (2 * target))
            prefix = "".join(rng.choice(kanji) for _ in range(p))
            a = prefix + "".join(rng.choice(kanji) for _ in range(s))
            b = prefix + "".join(rng.choice(kanji) for _ in range(s))
        rows.append({"id": f"pair-{k:02d}", "target": target, "jaccard": jaccard(a, b),
                     "a": a, "b": b})
    write_jsonl("minhash_pairs.jsonl", rows)


# ---------------------------------------------------------------------------
# ROUGE-2 pairs

ROUGE_PAIRS = [
    ("a b c d", "a b c e", "whitespace"),
    ("the cat sat on the mat", "the cat sat on the mat", "whitespace"),
    ("the cat sat on the mat", "a dog lay on the rug", "whitespace"),
    ("the the the the", "the the", "whitespace"),
    ("東京で会議が開かれた", "東京で会議が行われた", "char"),
    ("大雨で電車が止まった", "大雨の影響で電車が運休した", "char"),
    ("新しい駅ができる", "古い橋が壊れた", "char"),
    ("あ", "あい", "char"),
    ("市は予算案を発表した。", "市が新年度の予算案を発表。", "char"),
    ("ああああ", "ああ", "char"),
]


def make_rouge():
    rows = []
    for i, (hyp, ref, mode) in enumerate(ROUGE_PAIRS):
        rows.append({"id": f"rouge-{i}", "hypothesis": hyp, "reference": ref,
                     "segmenter": mode, "expected": rouge2(hyp, ref, mode)})
    assert abs(rows[0]["expected"] - 2 / 3) < 1e-15
    write_jsonl("rouge_pairs.jsonl", rows)


# ---------------------------------------------------------------------------
# Eval fixture suite scored by the mock table

def make_eval():
    mc_exemplars = [
        {"id": "mcx-1", "question": "日本の首都はどこ?", "choices": ["大阪", "東京", "京都"], "gold_index": 1},
        {"id": "mcx-2", "question": "一年は何か月?", "choices": ["十", "十二"], "gold_index": 1},
    ]
    mc = [
        {"id": "mc-1", "question": "富士山がある国は?", "choices": ["日本", "中国", "韓国"], "gold_index": 0},
        {"id": "mc-2", "question": "水の化学式は?", "choices": ["CO2", "H2O"], "gold_index": 1},
        {"id": "mc-3", "question": "一週間は何日?", "choices": ["五日", "六日", "七日"], "gold_index": 2},
        {"id": "mc-4", "question": "太陽が昇る方角は?", "choices": ["東", "西"], "gold_index": 0},
    ]
    # mc-4 is scored wrong on purpose: 3 of 4 correct.
    picks = {"mc-1": 0, "mc-2": 1, "mc-3": 2, "mc-4": 1}
    likelihood = []
    for inst in mc:
        for j, choice in enumerate(inst["choices"]):
            likelihood.append({"contains": inst["question"], "continuation": choice,
                               "value": -1.0 if j == picks[inst["id"]] else -5.0 - j})

    em_exemplars = [{"id": "emx-1", "question": "日本一高い山は?", "references": ["富士山"]}]
    em = [
        {"id": "em-1", "question": "日本の首都は?", "references": ["東京"]},
        {"id": "em-2", "question": "Capital of Japan in English?", "references": ["tokyo"]},
        {"id": "em-3", "question": "りんごの色は?", "references": ["赤"]},
        {"id": "em-4", "question": "1たす1は?", "references": ["2"]},
    ]
    em_outputs = {"em-1": "東京。", "em-2": "Ｔｏｋｙｏ", "em-3": "青", "em-4": " 2 \n\nextra"}
    em_correct = {"em-1": True, "em-2": True, "em-3": False, "em-4": True}

    summaries = [
        {"id": "sum-1", "question": "記事: 東京で国際会議が開かれ、各国の代表が集まった。",
         "references": ["東京で国際会議が開かれた"], "output": "東京で会議が開かれた"},
        {"id": "sum-2", "question": "記事: 大雨の影響で電車が運休し、多くの人が困った。",
         "references": ["大雨で電車が運休した"], "output": "大雨で電車が止まった"},
        {"id": "sum-3", "question": "記事: 市は新しい図書館の建設計画を発表した。",
         "references": ["市が図書館の建設計画を発表"], "output": "新しい駅ができる"},
    ]
    generate = [{"contains": r["question"], "output": em_outputs[r["id"]]} for r in em]
    generate += [{"contains": r["question"], "output": r["output"]} for r in summaries]
    generate.append({"contains": "故障", "error": "simulated backend failure"})

    write_jsonl("eval/mc.jsonl", mc)
    write_jsonl("eval/em.jsonl", em)
    write_jsonl("eval/sum.jsonl", [{k: v for k, v in r.items() if k != "output"}
                                   for r in summaries])
    write_jsonl("eval/broken.jsonl", [{"id": "b-1", "question": "故障中?", "references": ["はい"]},
                                      {"id": "b-2", "question": "日本の首都は?", "references": ["東京"]}])
    write_json("eval/mock_table.json", {"version": 1, "mode": "table",
                                        "loglikelihood": likelihood, "generate": generate})
    tasks = [
        {"name": "mc_demo", "task_type": "multiple_choice", "n_shots": 2,
         "template": {"question": "質問:{question}\n選択肢:{choices}\n回答:", "answer": " {answer}"},
         "exemplars": mc_exemplars, "data": "mc.jsonl", "metric_name": "acc"},
        {"name": "em_demo", "task_type": "generate_em", "n_shots": 1,
         "template": {"question": "Q: {question}\n", "answer": "A: {answer}"},
         "exemplars": em_exemplars, "data": "em.jsonl", "metric_name": "em"},
        {"name": "sum_demo", "task_type": "generate_rouge2", "n_shots": 0,
         "template": {"question": "{question}\n要約:", "answer": "{answer}"},
         "data": "sum.jsonl", "metric_name": "rouge-2", "excluded_from_7avg": True,
         "rouge_segmenter": "char"},
    ]
    write_json("eval/suite.json", {"version": 1, "name": "fixture", "tasks": tasks})
    write_json("eval/broken_suite.json", {"version": 1, "name": "broken", "tasks": [
        {"name": "broken_em", "task_type": "generate_em", "n_shots": 0,
         "template": {"question": "Q: {question}\n", "answer": "A: {answer}"},
         "data": "broken.jsonl", "metric_name": "em"}]})

    mc_value = 100.0 * sum(picks[r["id"]] == r["gold_index"] for r in mc) / len(mc)
    em_value = 100.0 * sum(em_correct.values()) / len(em)
    sum_value = 100.0 * sum(rouge2(r["output"], r["references"][0], "char")
                            for r in summaries) / len(summaries)
    write_json("eval/expected.json", {
        "mc_demo": mc_value, "em_demo": em_value, "sum_demo": sum_value,
        "avg": (mc_value + em_value + sum_value) / 3,
        "avg_excl": (mc_value + em_value) / 2,
    })


# ---------------------------------------------------------------------------
# Published suite tables, entered row by row

JA_TASKS = ["JCS", "JNLI", "MARC-ja", "JSQuAD", "JAQKET", "XLSum-ja", "xWino", "MGSM"]
JA_METRICS = ["acc", "acc", "acc", "em", "em", "rouge-2", "acc", "acc"]
JA_SHOTS = [3, 3, 3, 2, 1, 1, 0, 5]
EN_TASKS = ["ARC", "HellaSwag", "MMLU", "TruthfulQA"]
EN_SHOTS = [25, 10, 5, 6]

JA_FOUNDATION = [
    ("rakuten-ai-7b", 69.80, 62.83, [84.27, 48.69, 96.29, 79.09, 80.67, 14.08, 77.16, 22.40]),
    ("nekomata-7b", 66.01, 58.83, [85.43, 40.14, 96.80, 76.29, 71.99, 8.59, 73.83, 17.60]),
    ("japanese-stablelm-base-gamma-7b", 64.83, 59.12,
     [80.07, 14.71, 92.41, 81.38, 85.05, 19.16, 82.59, 17.60]),
    ("youri-7b", 62.71, 56.90, [76.94, 51.11, 90.96, 57.45, 78.09, 16.27, 78.00, 6.40]),
    ("swallow-7b", 60.86, 55.18, [78.91, 15.16, 90.27, 73.28, 80.24, 15.41, 76.96, 11.20]),
    ("elyza-japanese-Llama-2-7b", 60.24, 53.26,
     [75.60, 50.74, 87.51, 71.48, 57.56, 4.40, 71.22, 7.60]),
    ("elyza-japanese-Llama-2-7b-fast", 58.31, 51.34,
     [71.49, 45.77, 86.61, 70.91, 64.18, 2.54, 61.63, 7.60]),
    ("open-calm-7b", 45.27, 39.67, [62.65, 31.92, 85.37, 38.05, 33.42, 0.45, 65.07, 0.40]),
]
EN_FOUNDATION = [
    ("rakuten-ai-7b", 60.50, [60.24, 82.20, 61.31, 38.25]),
    ("japanese-stablelm-base-gamma-7b", 56.08, [50.60, 77.43, 54.99, 41.30]),
    ("elyza-japanese-Llama-2-7b", 52.76, [51.62, 76.54, 44.85, 38.02]),
    ("elyza-japanese-Llama-2-7b-fast", 52.07, [51.79, 75.46, 44.41, 36.63]),
    ("nekomata-7b", 51.97, [47.35, 72.78, 48.38, 39.38]),
    ("youri-7b", 50.60, [49.15, 75.02, 42.36, 35.89]),
    ("swallow-7b", 49.90, [47.35, 72.20, 39.36, 40.68]),
    ("open-calm-7b", 29.87, [20.56, 31.01, 23.73, 44.16]),
]
JA_INSTRUCT = [
    ("rakuten-ai-7b-instruct", 77.32, 68.74, [93.03, 90.39, 96.00, 80.44, 81.79, 8.67, 75.18, 24.40]),
    ("youri-7b-instruction", 73.35, 66.84, [86.06, 70.13, 97.03, 82.53, 79.47, 21.29, 79.04, 19.20]),
    ("japanese-stablelm-instruct-gamma-7b", 65.46, 59.98,
     [83.82, 16.97, 95.68, 76.20, 81.87, 21.58, 82.06, 21.60]),
    ("swallow-7b-instruct", 64.29, 58.25, [83.38, 26.50, 94.46, 75.62, 81.01, 16.01, 76.23, 12.80]),
    ("elyza-japanese-Llama-2-7b-instruct", 60.04, 53.19,
     [65.15, 57.44, 91.51, 67.29, 58.51, 5.20, 70.80, 9.60]),
    ("elyza-japanese-Llama-2-7b-fast-instruct", 57.22, 50.48,
     [70.69, 36.48, 92.75, 68.87, 62.29, 3.36, 59.44, 10.00]),
    ("nekomata-7b-instruction", 49.04, 44.14, [85.08, 42.48, 96.99, 8.51, 10.91, 9.81, 76.12, 23.20]),
]
EN_INSTRUCT = [
    ("rakuten-ai-7b-instruct", 61.32, [58.62, 82.70, 60.32, 43.63]),
    ("japanese-stablelm-instruct-gamma-7b", 55.91, [50.43, 77.10, 54.61, 41.50]),
    ("elyza-japanese-Llama-2-7b-fast-instruct", 54.21, [53.58, 77.69, 46.91, 38.67]),
    ("elyza-japanese-Llama-2-7b-instruct", 54.07, [52.05, 78.33, 47.09, 38.83]),
    ("nekomata-7b-instruction", 52.84, [50.34, 73.67, 48.53, 38.81]),
    ("youri-7b-instruction", 52.11, [48.98, 75.66, 45.41, 38.38]),
    ("swallow-7b-instruct", 50.32, [47.61, 72.27, 40.77, 40.62]),
]


def make_tables():
    rows = []
    for group, table in (("ja_foundation", JA_FOUNDATION), ("ja_instruct", JA_INSTRUCT)):
        for model, avg_excl, avg, values in table:
            rows.append({"group": group, "model": model, "avg": avg, "avg_excl": avg_excl,
                         "tasks": [{"name": n, "metric": m, "shots": k, "value": v,
                                    "excluded_from_7avg": n == "XLSum-ja"}
                                   for n, m, k, v in zip(JA_TASKS, JA_METRICS, JA_SHOTS,
                                                         values)]})
    for group, table in (("en_foundation", EN_FOUNDATION), ("en_instruct", EN_INSTRUCT)):
        for model, avg, values in table:
            rows.append({"group": group, "model": model, "avg": avg, "avg_excl": None,
                         "tasks": [{"name": n, "metric": "acc", "shots": k, "value": v,
                                    "excluded_from_7avg": False}
                                   for n, k, v in zip(EN_TASKS, EN_SHOTS, values)]})
    write_json("tables.json", {"rows": rows})
    # The foundation-model row in the --aggregate-only input format.
    write_json("eval/aggregate_row.json", {"tasks": rows[0]["tasks"]})


def main():
    make_corpora()
    make_pipeline()
    make_quality()
    make_pii()
    make_minhash_pairs()
    make_rouge()
    make_eval()
    make_tables()


if __name__ == "__main__":
    main()
