"""Run configuration: a flat JSON file with documented keys.

Keys
----
command            one of: least, classify, bundle, project, tangents,
                   artin, theta, report-all
dimension          source dimension n
variables          optional source variable names (default: t / s,t / t1..)
basepoint          list of n exact scalar strings ("0", "1/2", "1+1/3*i")
components         parametrisation components (expression strings); or
generators         function-space generators (expression strings)
target_variables   optional target names (default: x / x,y / x,y,z / ...)
degree             polynomial degree d (where applicable)
truncation         truncation order K (optional; sensible default)
truncation_cap     retry cap for doubling K on TruncationInsufficient
seed               sampling seed (default 0)
target_polynomial  expression in the target variables (project command)
out                output path for the JSON report (optional)
"""

from __future__ import annotations

import json

from .errors import ComputationError, ConfigError
from .expressions import parse_expression
from .jets import Jet
from .least import FunctionSpace
from .parametrization import (Parametrization, default_source_names,
                              default_target_names)
from .scalar import parse_scalar

COMMANDS = ("least", "classify", "bundle", "project", "tangents", "artin",
            "theta", "report-all")


class RunConfig:
    def __init__(self, data):
        if not isinstance(data, dict):
            raise ConfigError("config root must be a JSON object")
        self.raw = data
        self.command = data.get("command")
        if self.command is not None and self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        try:
            self.n = int(data["dimension"])
        except KeyError:
            raise ConfigError("missing key: dimension")
        if self.n < 1:
            raise ConfigError("dimension must be >= 1")
        self.variables = tuple(data.get("variables")
                               or default_source_names(self.n))
        if len(self.variables) != self.n:
            raise ConfigError("variables length disagrees with dimension")
        base = data.get("basepoint")
        if not isinstance(base, list) or len(base) != self.n:
            raise ConfigError("basepoint must list n exact scalars")
        try:
            self.base = tuple(parse_scalar(str(b)) for b in base)
        except ValueError as exc:
            raise ConfigError(f"bad basepoint entry: {exc}")
        self.components = data.get("components")
        self.generators = data.get("generators")
        if self.components is None and self.generators is None:
            raise ConfigError("need either components or generators")
        self.target_variables = data.get("target_variables")
        if self.components is not None and self.target_variables is None:
            self.target_variables = default_target_names(
                len(self.components))
        self.degree = int(data.get("degree", 1))
        if self.degree < 0:
            raise ConfigError("degree must be >= 0")
        self.truncation = data.get("truncation")
        if self.truncation is not None:
            self.truncation = int(self.truncation)
            if self.truncation < 1:
                raise ConfigError("truncation must be >= 1")
        self.truncation_cap = int(data.get("truncation_cap", 512))
        self.seed = int(data.get("seed", 0))
        self.target_polynomial = data.get("target_polynomial")
        self.out = data.get("out")

    @classmethod
    def load(cls, path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}")
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}")
        return cls(data)

    # -- builders -----------------------------------------------------------

    def parametrization(self):
        if self.components is None:
            raise ConfigError("this command needs parametrisation "
                              "components")
        trees = [parse_expression(text, self.variables)
                 for text in self.components]
        return Parametrization(trees, self.base, self.variables,
                               self.target_variables)

    def function_space(self, order):
        if self.generators is None:
            raise ConfigError("this command needs generators")
        trees = [parse_expression(text, self.variables)
                 for text in self.generators]
        coords = [Jet.coordinate(self.variables, self.base, i)
                  for i in range(self.n)]
        exact = all(t.is_polynomial() for t in trees)
        eff = float("inf") if exact else order
        jets = [t.evaluate(coords, eff) for t in trees]
        return FunctionSpace(jets, labels=list(self.generators))

    def target_poly(self):
        if not self.target_polynomial:
            raise ConfigError("the project command needs target_polynomial")
        if self.components is None:
            raise ConfigError("project works on parametrisation configs")
        tree = parse_expression(self.target_polynomial,
                                self.target_variables)
        if not tree.is_polynomial():
            raise ConfigError("target_polynomial must be polynomial")
        return tree

    def echo(self):
        """Deterministic input echo for reports."""
        out = {
            "dimension": self.n,
            "variables": list(self.variables),
            "basepoint": [str(b) for b in self.base],
        }
        if self.components is not None:
            out["components"] = list(self.components)
            out["targetVariables"] = list(self.target_variables)
        if self.generators is not None:
            out["generators"] = list(self.generators)
        out["degree"] = self.degree
        if self.target_polynomial:
            out["targetPolynomial"] = self.target_polynomial
        return out
