from dataclasses import dataclass


@dataclass(frozen=True)
class Value:
    v: int

    kind = "value"


@dataclass(frozen=True)
class FuelExhausted:
    """ Evaluation did not converge within the granted fuel (stand-in for undefinedness). """
    consumed: int

    kind = "fuel"
