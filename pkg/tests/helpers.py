"""Shared fixtures: published spectrum strings and small numeric utilities."""
import numpy as np

from ptnu import PtPotential

# Bound-state levels E_n (fm^-1) for m=10, V1=5, V2=3 as published, one
# column string per alpha.  The n=3, alpha=0.8 entry is printed with only
# seven decimals in the source.
TABLE2_ALPHAS = (1.2, 0.8, 0.4, 0.2, 0.02, 0.002)
TABLE2_STRINGS = {
    1.2: ("18.02560022", "22.87051710", "28.29143398", "34.28835086",
          "40.86126774", "48.01018462", "55.73510150"),
    0.8: ("17.23163309", "20.32991862", "23.68420415", "27.2944896",
          "31.16077522", "35.28306074", "39.66134628"),
    0.4: ("16.47211973", "17.95616357", "19.50420742", "21.11625126",
          "22.79229510", "24.53233894", "26.33638278"),
    0.2: ("16.10494172", "16.83082621", "17.57271070", "18.33059518",
          "19.10447967", "19.89436416", "20.70024864"),
    0.02: ("15.78149898", "15.85264289", "15.92394680", "15.99541071",
           "16.06703463", "16.13881854", "16.21076245"),
    0.002: ("15.74951629", "15.75661628", "15.76371786", "15.77082105",
            "15.77792584", "15.78503222", "15.79214021"),
}

M_REF, V1_REF, V2_REF = 10.0, 5.0, 3.0


def reference_potential(alpha: float) -> PtPotential:
    return PtPotential(M_REF, V1_REF, V2_REF, alpha)


def count_sign_changes(values, floor_rel: float = 1e-9) -> int:
    """Sign alternations among entries above a relative magnitude floor."""
    values = np.asarray(values, dtype=float)
    floor = floor_rel * np.max(np.abs(values))
    signs = np.sign(values[np.abs(values) > floor])
    return int(np.sum(signs[1:] * signs[:-1] < 0))


def matches_printed(value: float, printed: str) -> bool:
    """String-level comparison at the printed precision, allowing the
    published figure to be off by one unit in its last digit."""
    decimals = len(printed.split(".")[1])
    mine = f"{value:.{decimals}f}"
    if mine == printed:
        return True
    return abs(int(mine.replace(".", "")) - int(printed.replace(".", ""))) == 1
