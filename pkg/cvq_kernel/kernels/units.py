"""
Squeezing units module.

Levels in dB are 10 log10 of a quadrature variance in shot-noise units, so
r (nats) = dB ln(10) / 20.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from cvq_kernel.utils.exceptions import InvalidArgumentError
from cvq_kernel.utils.generic_utils import check_finite

DB_PER_NAT = 20.0 / math.log(10.0)

DB_TO_NATS = "db->nats"
NATS_TO_DB = "nats->db"


def db_to_nats(db: float) -> float:
    """
    Convert a squeezing level in dB to nats.

    Parameters
    ----------
    db : float
        Level in dB.

    Returns
    -------
    float
        Squeezing parameter in nats.
    """
    check_finite("db", db)
    return db / DB_PER_NAT


def nats_to_db(nats: float) -> float:
    """
    Convert a squeezing parameter in nats to dB.

    Parameters
    ----------
    nats : float
        Squeezing parameter in nats.

    Returns
    -------
    float
        Level in dB.
    """
    check_finite("nats", nats)
    return nats * DB_PER_NAT


def db_nats_convert(value: float, direction: str) -> float:
    """
    Convert between dB and nats.

    Parameters
    ----------
    value : float
        Value to convert.
    direction : str
        Either "db->nats" or "nats->db".

    Returns
    -------
    float
        Converted value.
    """
    if direction == DB_TO_NATS:
        return db_to_nats(value)
    if direction == NATS_TO_DB:
        return nats_to_db(value)
    raise InvalidArgumentError(f"Unknown conversion direction '{direction}'.")


@dataclass(frozen=True)
class GateLevel:
    """
    Gate-squeezing level r_g, the hyperparameter of the kernel.

    Attributes
    ----------
    db : float
        Level in dB.
    nats : float
        r_g in nats.
    """

    db: float
    nats: float

    def __post_init__(self) -> None:
        check_finite("db", self.db)
        if self.db < 0:
            raise InvalidArgumentError(f"Gate level must be non-negative, got {self.db} dB.")
        if abs(self.nats - db_to_nats(self.db)) > 1e-12:
            raise InvalidArgumentError("Gate level nats and dB values disagree.")

    @classmethod
    def from_db(cls, db: float) -> "GateLevel":
        """
        Build from a level in dB.

        Parameters
        ----------
        db : float
            Level in dB.

        Returns
        -------
        GateLevel
            Gate level.
        """
        return cls(db=float(db), nats=db_to_nats(float(db)))

    @classmethod
    def from_nats(cls, nats: float) -> "GateLevel":
        """
        Build from r_g in nats.

        Parameters
        ----------
        nats : float
            r_g in nats.

        Returns
        -------
        GateLevel
            Gate level.
        """
        db = nats_to_db(float(nats))
        return cls(db=db, nats=db_to_nats(db))
