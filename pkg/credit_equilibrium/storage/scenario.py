"""Scenario files: JSON economies validated with pydantic."""
import logging
from typing import List, Literal, Optional

import pydantic
from pydantic import BaseModel, ConfigDict, Field

from ..config import DEFAULT_HORIZON
from ..errors import ScenarioError
from ..models import StaticAgent, StaticEconomy, Technology
from ..ramsey.models import DynamicAgent, DynamicEconomy

logger = logging.getLogger(__name__)


class AgentRecord(BaseModel):
    """One agent. Static agents need A and S; Ramsey agents need beta, A or A_path, and w0 or s0."""

    model_config = ConfigDict(extra='forbid')

    id: int
    tech: Literal['linear', 'cobb_douglas'] = 'linear'
    A: Optional[float] = Field(default=None, gt=0)
    A_path: Optional[List[float]] = None
    alpha: Optional[float] = Field(default=None, gt=0, lt=1)
    gamma: float = Field(gt=0, lt=1)
    S: Optional[float] = Field(default=None, gt=0)
    w0: Optional[float] = Field(default=None, gt=0)
    s0: Optional[float] = Field(default=None, gt=0)
    beta: Optional[float] = Field(default=None, gt=0, lt=1)


class SweepTarget(BaseModel):
    model_config = ConfigDict(extra='forbid')

    agent: int
    param: Literal['A', 'gamma']


class SweepSpec(BaseModel):
    """Grid for `static sweep`; `from` and `to` are the ends, `open` drops them."""

    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    target: SweepTarget
    start: float = Field(alias='from')
    stop: float = Field(alias='to')
    steps: int = Field(ge=1)
    open: bool = False


class Scenario(BaseModel):
    """A whole scenario file."""

    model_config = ConfigDict(extra='forbid')

    model: Literal['static', 'ramsey']
    agents: List[AgentRecord] = Field(min_length=1)
    horizon: Optional[int] = Field(default=None, ge=1)
    sweep: Optional[SweepSpec] = None


def _location(loc):
    # ('agents', 2, 'gamma') -> agents[2].gamma
    text = ''
    for part in loc:
        if isinstance(part, int):
            text += f'[{part}]'
        else:
            text += f'.{part}' if text else str(part)
    return text


def _semantic_diagnostics(scenario):
    problems = []
    seen = set()
    horizon = scenario.horizon or DEFAULT_HORIZON
    for i, agent in enumerate(scenario.agents):
        where = f'agents[{i}]'
        if agent.id in seen:
            problems.append(f'{where}.id: duplicate id {agent.id}')
        seen.add(agent.id)
        if agent.tech == 'cobb_douglas' and agent.alpha is None:
            problems.append(f'{where}.alpha: required for cobb_douglas')
        if scenario.model == 'static':
            if agent.A is None:
                problems.append(f'{where}.A: required for static scenarios')
            if agent.S is None:
                problems.append(f'{where}.S: required for static scenarios')
            continue
        if agent.tech != 'linear':
            problems.append(f'{where}.tech: ramsey scenarios use linear technologies')
        if agent.beta is None:
            problems.append(f'{where}.beta: required for ramsey scenarios')
        if (agent.A is None) == (agent.A_path is None):
            problems.append(f'{where}: give exactly one of A and A_path')
        elif agent.A_path is not None:
            if any(a <= 0 for a in agent.A_path):
                problems.append(f'{where}.A_path: productivities must be positive')
            if len(agent.A_path) < horizon:
                problems.append(f'{where}.A_path: A_path shorter than horizon ({len(agent.A_path)} < {horizon})')
        if (agent.w0 is None) == (agent.s0 is None):
            problems.append(f'{where}: give exactly one of w0 and s0')
    if scenario.sweep is not None:
        if scenario.sweep.target.agent not in seen:
            problems.append(f'sweep.target.agent: no agent with id {scenario.sweep.target.agent}')
        if not scenario.sweep.stop > scenario.sweep.start:
            problems.append('sweep.to: must exceed sweep.from')
    return problems


def parse_scenario(raw):
    """
    Parse scenario bytes.

    Args:
        raw: UTF-8 JSON bytes or str

    Returns:
        Scenario: The validated scenario

    Raises:
        ScenarioError: With one located diagnostic per problem
    """
    try:
        scenario = Scenario.model_validate_json(raw)
    except pydantic.ValidationError as exc:
        diagnostics = []
        for err in exc.errors():
            where = _location(err['loc'])
            diagnostics.append(f"{where}: {err['msg']}" if where else err['msg'])
        raise ScenarioError(diagnostics) from exc
    problems = _semantic_diagnostics(scenario)
    if problems:
        raise ScenarioError(problems)
    logger.debug("Parsed %s scenario with %d agents", scenario.model, len(scenario.agents))
    return scenario


def serialize_scenario(scenario):
    """Scenario back to canonical JSON bytes."""
    return scenario.model_dump_json(by_alias=True, exclude_none=True, indent=2).encode('utf-8')


def to_static_economy(scenario):
    """
    Build the StaticEconomy a static scenario describes.

    Raises:
        ScenarioError: If the scenario is not static
    """
    if scenario.model != 'static':
        raise ScenarioError([f'model: expected static, got {scenario.model}'])
    agents = []
    for a in scenario.agents:
        if a.tech == 'linear':
            tech = Technology.linear(a.A)
        else:
            tech = Technology.cobb_douglas(a.A, a.alpha)
        agents.append(StaticAgent(a.id, tech, a.gamma, a.S))
    return StaticEconomy(tuple(agents))


def to_dynamic_economy(scenario, horizon=None):
    """
    Build the DynamicEconomy a ramsey scenario describes.

    Args:
        scenario: Parsed Scenario
        horizon: Overrides the scenario horizon

    Raises:
        ScenarioError: If the scenario is not a ramsey scenario
    """
    if scenario.model != 'ramsey':
        raise ScenarioError([f'model: expected ramsey, got {scenario.model}'])
    horizon = horizon or scenario.horizon or DEFAULT_HORIZON
    agents = []
    for a in scenario.agents:
        path = tuple(a.A_path) if a.A_path is not None else (a.A,)
        w0 = a.w0 if a.w0 is not None else a.s0 / a.beta
        agents.append(DynamicAgent(a.id, a.beta, a.gamma, w0, path))
    return DynamicEconomy(tuple(agents), horizon)
