# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.synth._generate`
================================================================================

Seeded synthetic worlds: CEOs with latent MBTI traits, crowd votes, Big 5
scores, earnings-call transcripts whose CEO turns mix pole vocabulary in
proportion to the traits, and firm price paths whose realized volatilities
equal planted values.

The volatility after a call is ``vol_base * exp(vol_scale * u)`` where ``u``
is a unit-variance linear index of standardized controls and traits with the
configured betas plus Gaussian noise.

"""

from __future__ import annotations

import datetime
import json
import logging
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .._constants import BIG5_TRAITS, SCALES, POST_CALL_DAYS, PRE_CALL_DAYS
from .._errors import InputError, ValidationError
from ..corpus._names import normalize_name
from ..corpus._structs import Role, Section, Transcript, Utterance
from ..corpus._transcript import serialize_transcript
from ..econ._design import FIN_CONTROLS, RiskRow
from ..econ._industry import ff12_industry
from ..econ._panel import period_label
from ..econ._prices import PriceSeries
from ..labels._structs import Big5Vector, MbtiVector, VoteRecord
from ..labels._votes import write_big5, write_labels, write_votes
from ._config import SynthConfig

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

FIRST_NAMES = (
    "Alice", "Brian", "Carla", "David", "Elena", "Frank", "Grace", "Henry",
    "Irene", "James", "Karen", "Louis", "Maria", "Nathan", "Olivia", "Peter",
    "Quinn", "Rachel", "Samuel", "Teresa", "Victor", "Wendy", "Xavier", "Yvonne",
    "Zachary", "Andrea", "Bruce", "Claire", "Daniel", "Emily",
)
LAST_NAMES = (
    "Anderson", "Brooks", "Carter", "Dalton", "Ellison", "Fischer", "Garcia",
    "Hughes", "Iverson", "Jensen", "Keller", "Lambert", "Morgan", "Nolan",
    "Owens", "Parker", "Quincy", "Reyes", "Sanders", "Turner", "Underwood",
    "Vaughn", "Walsh", "Young", "Zimmerman", "Bennett", "Coleman", "Dunn",
)
ANALYSTS = ("Mark Stone", "Julia Chen", "Omar Haddad", "Sofia Rossi", "Ken Ito")
TITLES = ("Dr.", "Mr.", "Ms.", "Mrs.", "Prof.")

# one SIC code per Fama-French 12 industry
SIC_CODES = (2011, 3711, 3312, 1311, 2821, 3571, 4813, 4911, 5411, 2834, 6021, 8711)

CONTROL_MEANS = {"size": 22.0, "volume": 14.0}


@dataclass(frozen=True, eq=False)
class World:
    """Everything `gen_world` generates"""

    config: SynthConfig
    ceos: Tuple[str, ...]
    traits: Dict[str, MbtiVector]
    big5: Dict[str, Big5Vector]
    votes: Dict[str, List[VoteRecord]]
    transcripts: Tuple[Transcript, ...]
    call_ceo: Dict[str, str]
    panel: pd.DataFrame
    prices: Dict[str, PriceSeries]
    rows: Tuple[RiskRow, ...]

    def labels(self) -> Dict[str, MbtiVector]:
        """Latent traits keyed by CEO, with ``total_votes`` set"""
        return {
            ceo: MbtiVector.from_array(v.as_array(), self.config.votes_per_ceo)
            for ceo, v in self.traits.items()
        }


def _trait_moments(config: SynthConfig) -> Tuple[np.ndarray, np.ndarray]:
    means = []
    sds = []
    for scale in SCALES:
        a, b = config.trait_priors[scale]
        means.append(a / (a + b))
        sds.append(np.sqrt(a * b / ((a + b) ** 2 * (a + b + 1.0))))
    return np.array(means), np.array(sds)


def _draw_traits(rng: np.random.Generator, config: SynthConfig, n: int) -> np.ndarray:
    return np.column_stack([rng.beta(*config.trait_priors[scale], size=n) for scale in SCALES])


def _controls(rng: np.random.Generator, n: int) -> Tuple[np.ndarray, Dict[str, np.ndarray]]:
    # raw controls as smooth monotone functions of independent standard normals
    z = rng.standard_normal((n, len(FIN_CONTROLS)))
    column = {name: z[:, j] for j, name in enumerate(FIN_CONTROLS)}
    raw = {
        "past_vola": np.maximum(0.02 + 0.004 * column["past_vola"], 0.002),
        "size": np.expm1(CONTROL_MEANS["size"] + 1.5 * column["size"]),
        "volume": np.expm1(CONTROL_MEANS["volume"] + column["volume"]),
        "leverage": 1.0 / (1.0 + np.exp(0.85 - 0.5 * column["leverage"])),
        "spread": 0.002 * np.exp(0.4 * column["spread"]),
        "btm": np.exp(-0.7 + 0.5 * column["btm"]),
        "sue": 0.05 * np.exp(0.8 * column["sue"]),
        "roa": 0.05 + 0.04 * column["roa"],
    }
    return z, raw


def _volatility(
    rng: np.random.Generator, config: SynthConfig, z: np.ndarray, traits: np.ndarray
) -> np.ndarray:
    means, sds = _trait_moments(config)
    index = z @ np.array([config.fin_betas[name] for name in FIN_CONTROLS])
    index += ((traits - means) / sds) @ np.array([config.mbti_betas[s] for s in SCALES])
    index += config.noise_sd * rng.standard_normal(z.shape[0])
    return config.vol_base * np.exp(config.vol_scale * index)


def _big5(rng: np.random.Generator, config: SynthConfig, traits: np.ndarray) -> np.ndarray:
    means, _ = _trait_moments(config)
    centred = traits - means
    n = traits.shape[0]
    noise = config.big5_noise * rng.standard_normal((n, len(BIG5_TRAITS)))
    scores = np.column_stack(
        [
            0.5 + 0.8 * centred[:, 1],  # openness ~ intuition
            0.5 - 0.8 * centred[:, 3],  # conscientiousness ~ judging
            0.5 - 0.8 * centred[:, 0],  # extraversion ~ extraversion pole
            0.5 + 0.8 * centred[:, 2],  # agreeableness ~ feeling
            np.full(n, 0.5),
        ]
    )
    return np.clip(scores + noise, 0.0, 1.0)


def _votes(rng: np.random.Generator, config: SynthConfig, traits: np.ndarray) -> List[List[VoteRecord]]:
    probability = traits
    if config.vote_noise > 0.0:
        probability = probability + config.vote_noise * rng.standard_normal(traits.shape)
    right = rng.binomial(config.votes_per_ceo, np.clip(probability, 0.0, 1.0))
    return [
        [
            VoteRecord(scale, config.votes_per_ceo - int(right[i, k]), int(right[i, k]))
            for k, scale in enumerate(SCALES)
        ]
        for i in range(traits.shape[0])
    ]


def _names(rng: np.random.Generator, n: int) -> List[str]:
    pool = len(FIRST_NAMES) * len(LAST_NAMES)
    if n > pool:
        raise ValidationError(f"at most {pool} CEOs can be named")
    picks = rng.choice(pool, size=n, replace=False)
    return [f"{FIRST_NAMES[p // len(LAST_NAMES)]} {LAST_NAMES[p % len(LAST_NAMES)]}" for p in picks]


def _display_name(rng: np.random.Generator, config: SynthConfig, name: str) -> str:
    first, last = name.split(" ", 1)
    if rng.random() < config.title_rate:
        first = f"{first} {chr(ord('A') + int(rng.integers(26)))}."
    if rng.random() < config.title_rate:
        first = f"{TITLES[int(rng.integers(len(TITLES)))]} {first}"
    return f"{first} {last}"


def _ceo_tokens(rng: np.random.Generator, config: SynthConfig, trait: np.ndarray) -> List[str]:
    length = max(20, int(round(config.doc_length * rng.uniform(0.8, 1.2))))
    from_lexicon = rng.random(length) < config.lexicon_share
    scale_index = rng.integers(0, len(SCALES), size=length)
    right_pole = rng.random(length) < trait[scale_index]
    pick = rng.random(length)
    tokens = []
    for position in range(length):
        if from_lexicon[position]:
            scale = SCALES[scale_index[position]]
            words = config.lexicons[scale][1 if right_pole[position] else 0]
        else:
            words = config.filler
        tokens.append(words[int(pick[position] * len(words))])
    return tokens


def _sentences(tokens: Sequence[str], per_sentence: int = 12) -> str:
    sentences = []
    for start in range(0, len(tokens), per_sentence):
        words = list(tokens[start : start + per_sentence])
        words[0] = words[0][:1].upper() + words[0][1:]
        sentences.append(" ".join(words) + ".")
    return " ".join(sentences)


def _filler_text(rng: np.random.Generator, config: SynthConfig, n_tokens: int) -> str:
    picks = rng.integers(0, len(config.filler), size=n_tokens)
    return _sentences([config.filler[int(p)] for p in picks])


def _transcript(
    rng: np.random.Generator,
    config: SynthConfig,
    call_id: str,
    company: str,
    date: datetime.date,
    ceo_name: str,
    trait: np.ndarray,
) -> Transcript:
    tokens = _ceo_tokens(rng, config, trait)
    n_turns = int(rng.integers(3, 8))
    ceo_turns = [
        _sentences(list(chunk)) for chunk in np.array_split(np.array(tokens, dtype=object), n_turns)
    ]
    speaker = _display_name(rng, config, ceo_name)
    stamp = pd.Timestamp(date)
    turns = [
        ("Operator", Role.OPERATOR, Section.PRESENTATION, "Good day and welcome to the call."),
        (speaker, Role.CEO, Section.PRESENTATION, ceo_turns[0]),
        ("Pat Morgan", Role.OTHER, Section.PRESENTATION, _filler_text(rng, config, 40)),
    ]
    if n_turns > 3:
        turns.append((speaker, Role.CEO, Section.PRESENTATION, ceo_turns[1]))
        answers = ceo_turns[2:]
    else:
        answers = ceo_turns[1:]
    turns.append(("Operator", Role.OPERATOR, Section.QA, "We will now take questions."))
    for answer in answers:
        analyst = ANALYSTS[int(rng.integers(len(ANALYSTS)))]
        turns.append((analyst, Role.ANALYST, Section.QA, _filler_text(rng, config, 15)))
        turns.append((speaker, Role.CEO, Section.QA, answer))
    return Transcript(
        call_id=call_id,
        company_id=company,
        fiscal_quarter=(stamp.year, stamp.quarter),
        call_date=date,
        utterances=tuple(
            Utterance(name, role, section, text, order)
            for order, (name, role, section, text) in enumerate(turns)
        ),
    )


def _price_path(
    rng: np.random.Generator,
    n_days: int,
    call_days: Sequence[int],
    past: Sequence[float],
    post: Sequence[float],
) -> np.ndarray:
    # returns[j] links day j and day j + 1
    returns = 0.01 * rng.standard_normal(n_days - 1)

    def exact(target: float, size: int) -> np.ndarray:
        draws = rng.standard_normal(size)
        draws = (draws - draws.mean()) / draws.std(ddof=1)
        return target * draws

    for day, before, after in zip(call_days, past, post):
        returns[day - PRE_CALL_DAYS : day - 1] = exact(before, PRE_CALL_DAYS - 1)
        returns[day + 1 : day + POST_CALL_DAYS] = exact(after, POST_CALL_DAYS - 1)
    return 40.0 * np.exp(np.concatenate([[0.0], np.cumsum(returns)]))


def gen_world(config: Optional[SynthConfig] = None) -> World:
    """Generate a complete world from ``config.seed``"""
    # pylint: disable=too-many-locals
    config = config or SynthConfig()
    rng = np.random.default_rng(config.seed)
    n = config.n_ceos
    ceos = _names(rng, n)
    traits = _draw_traits(rng, config, n)
    big5 = _big5(rng, config, traits)
    votes = _votes(rng, config, traits)
    sic_offset = int(rng.integers(len(SIC_CODES)))
    base_age = rng.integers(42, 66, size=n)
    gender = (rng.random(n) < 0.1).astype(int)

    calls = config.calls_per()
    spacing = config.call_spacing
    n_days = PRE_CALL_DAYS + spacing * (max(calls) + 1) + POST_CALL_DAYS + 2
    calendar = pd.bdate_range(config.start_date, periods=n_days)

    transcripts = []
    call_ceo = {}
    panel = []
    prices = {}
    rows = []
    for i, ceo in enumerate(ceos):
        firm = f"F{i + 1:03d}"
        price_file = f"prices/{firm}.csv"
        sic = SIC_CODES[(sic_offset + i) % len(SIC_CODES)]
        first_day = PRE_CALL_DAYS + int(rng.integers(spacing))
        days = [first_day + k * spacing for k in range(calls[i])]
        z, raw = _controls(rng, calls[i])
        vola_post = _volatility(rng, config, z, np.tile(traits[i], (calls[i], 1)))
        path = _price_path(rng, n_days, days, raw["past_vola"], vola_post)
        prices[price_file] = PriceSeries(calendar.values.astype("datetime64[D]"), path)
        trait_vector = MbtiVector.from_array(traits[i])
        for k, day in enumerate(days):
            call_id = f"{firm}-C{k + 1:02d}"
            date = calendar[day].date()
            age = float(base_age[i]) + (day - days[0]) / 252.0
            transcripts.append(_transcript(rng, config, call_id, firm, date, ceo, traits[i]))
            call_ceo[call_id] = ceo
            close = path[day - 1]
            panel.append(
                {
                    "call_id": call_id,
                    "date": date.isoformat(),
                    "sic": f"{sic:04d}",
                    "age": age,
                    "gender": int(gender[i]),
                    "price_file": price_file,
                    "leverage": raw["leverage"][k],
                    "spread": raw["spread"][k],
                    "btm": raw["btm"][k],
                    "sue": raw["sue"][k],
                    "roa": raw["roa"][k],
                    "shares_out": raw["size"][k] / close,
                    "volume": raw["volume"][k],
                }
            )
            rows.append(
                RiskRow(
                    call_id=call_id,
                    vola_post=float(vola_post[k]),
                    age=age,
                    gender=int(gender[i]),
                    past_vola=float(raw["past_vola"][k]),
                    size=float(raw["size"][k]),
                    volume=float(raw["volume"][k]),
                    leverage=float(raw["leverage"][k]),
                    spread=float(raw["spread"][k]),
                    btm=float(raw["btm"][k]),
                    sue=float(raw["sue"][k]),
                    roa=float(raw["roa"][k]),
                    industry=ff12_industry(sic),
                    period=period_label(date),
                    mbti=trait_vector,
                )
            )
    logger.info("generated %d CEOs and %d calls", n, len(transcripts))
    return World(
        config=config,
        ceos=tuple(ceos),
        traits={ceo: MbtiVector.from_array(traits[i]) for i, ceo in enumerate(ceos)},
        big5={ceo: Big5Vector(*big5[i]) for i, ceo in enumerate(ceos)},
        votes={ceo: votes[i] for i, ceo in enumerate(ceos)},
        transcripts=tuple(transcripts),
        call_ceo=call_ceo,
        panel=pd.DataFrame(panel),
        prices=prices,
        rows=tuple(rows),
    )


def gen_panel(config: Optional[SynthConfig] = None, n_rows: int = 20000) -> List[RiskRow]:
    """Independent `RiskRow` draws with the latent traits as MBTI scores,
    spread over all twelve industries and ``config.n_periods`` quarters"""
    config = config or SynthConfig()
    if n_rows < 2:
        raise ValidationError("n_rows must be >= 2")
    rng = np.random.default_rng(config.seed)
    traits = _draw_traits(rng, config, n_rows)
    z, raw = _controls(rng, n_rows)
    vola_post = _volatility(rng, config, z, traits)
    industries = rng.integers(0, len(SIC_CODES), size=n_rows)
    first = pd.Period(pd.Timestamp(config.start_date), freq="Q")
    periods = [str(first + k) for k in range(config.n_periods)]
    period_index = rng.integers(0, config.n_periods, size=n_rows)
    age = np.clip(56.0 + 7.0 * rng.standard_normal(n_rows), 30.0, 85.0)
    gender = (rng.random(n_rows) < 0.1).astype(int)
    sectors = [ff12_industry(sic) for sic in SIC_CODES]
    return [
        RiskRow(
            call_id=f"P{i:06d}",
            vola_post=float(vola_post[i]),
            age=float(age[i]),
            gender=int(gender[i]),
            past_vola=float(raw["past_vola"][i]),
            size=float(raw["size"][i]),
            volume=float(raw["volume"][i]),
            leverage=float(raw["leverage"][i]),
            spread=float(raw["spread"][i]),
            btm=float(raw["btm"][i]),
            sue=float(raw["sue"][i]),
            roa=float(raw["roa"][i]),
            industry=sectors[industries[i]],
            period=periods[period_index[i]],
            mbti=MbtiVector.from_array(traits[i]),
        )
        for i in range(n_rows)
    ]


def write_world(world: World, directory) -> Dict[str, str]:
    """Write the world in the corpus, labels and econ file formats.

    :return: Paths of the written files and directories by role: ``manifest``,
        ``votes``, ``big5``, ``traits``, ``panel``, ``transcripts``, ``prices``
    """
    paths = {
        "manifest": os.path.join(directory, "manifest.jsonl"),
        "votes": os.path.join(directory, "votes.csv"),
        "big5": os.path.join(directory, "big5.csv"),
        "traits": os.path.join(directory, "traits.csv"),
        "panel": os.path.join(directory, "panel.csv"),
        "transcripts": os.path.join(directory, "transcripts"),
        "prices": os.path.join(directory, "prices"),
    }
    try:
        os.makedirs(paths["transcripts"], exist_ok=True)
        os.makedirs(paths["prices"], exist_ok=True)
        entries = []
        for transcript in world.transcripts:
            relative = f"transcripts/{transcript.call_id}.txt"
            with open(os.path.join(directory, relative), "w", encoding="utf-8") as file:
                file.write(serialize_transcript(transcript))
            entries.append(
                {
                    "path": relative,
                    "call_id": transcript.call_id,
                    "company_id": transcript.company_id,
                    "ceo": normalize_name(world.call_ceo[transcript.call_id]),
                }
            )
        with open(paths["manifest"], "w", encoding="utf-8") as file:
            for entry in entries:
                file.write(json.dumps(entry, sort_keys=True) + "\n")
        for relative, series in world.prices.items():
            series.to_csv(os.path.join(directory, relative))
        write_votes(paths["votes"], world.votes)
        write_big5(paths["big5"], world.big5)
        write_labels(paths["traits"], world.labels())
        world.panel.to_csv(paths["panel"], index=False, float_format="%.17g")
    except OSError as error:
        raise InputError(f"cannot write synthetic world to {directory}: {error}") from error
    return paths
