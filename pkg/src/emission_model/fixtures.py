"""Embedded transcriptions of the three published reference tables.

Values are stored exactly as printed (decimal commas normalised to points).
Nothing here is corrected; known oddities are flagged on the row instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class KRow(NamedTuple):
    """Reference table 1: emission coefficient per nuclide."""

    index: int
    symbol: str
    z: int
    a: int
    k: float

    @property
    def nuclide_id(self) -> str:
        return f"{self.symbol}-{self.a}"


class BindingRow(NamedTuple):
    """Reference table 2: experimental, modified-formula and original-formula energies (MeV)."""

    index: int
    symbol: str
    z: int
    a: int
    de_exp: float
    de_modified: float
    de_original: float
    suspect: bool = False

    @property
    def nuclide_id(self) -> str:
        return f"{self.symbol}-{self.a}"


class DecayRow(NamedTuple):
    """Reference table 3: radioactive k_i, half-life (s) and inferred stable k_j."""

    index: int
    symbol: str
    z: int
    a: int
    k_i: float
    tau: float
    k_j: float
    decay_mode: str

    @property
    def nuclide_id(self) -> str:
        return f"{self.symbol}-{self.a}"


_TABLE1 = (
    KRow(1, "H", 1, 2, 0.01487415),
    KRow(2, "H", 1, 3, 0.01891915),
    KRow(3, "He", 2, 3, 0.0172217),
    KRow(4, "He", 2, 4, 0.03153671),
    KRow(5, "He", 2, 5, 0.02028438),
    KRow(6, "He", 2, 6, 0.01610401),
    KRow(7, "Li", 3, 6, 0.01782666),
    KRow(8, "Li", 3, 7, 0.01749358),
    KRow(9, "Be", 4, 7, 0.01664449),
    KRow(10, "Be", 4, 8, 0.02086939),
    KRow(11, "Be", 4, 9, 0.0185187),
    KRow(12, "B", 5, 10, 0.01804123),
    KRow(13, "B", 5, 11, 0.01887152),
    KRow(14, "C", 6, 12, 0.02054377),
    KRow(15, "C", 6, 13, 0.01967787),
    KRow(16, "N", 7, 14, 0.01944138),
    KRow(17, "N", 7, 15, 0.01969392),
    KRow(18, "O", 8, 16, 0.0203198),
    KRow(19, "O", 8, 17, 0.01958026),
    KRow(20, "O", 8, 18, 0.01947679),
    KRow(21, "F", 9, 18, 0.0190572),
    KRow(22, "F", 9, 19, 0.01937953),
    KRow(23, "Ne", 10, 20, 0.02065861),
    KRow(24, "Ne", 10, 21, 0.0199899),
    KRow(25, "Ne", 10, 22, 0.01981272),
    KRow(26, "Si", 14, 31, 0.01953335),
    KRow(27, "Na", 11, 22, 0.01946794),
    KRow(28, "Na", 11, 23, 0.0194818),
    KRow(29, "Mg", 12, 24, 0.01942585),
    KRow(30, "Mg", 12, 25, 0.01982245),
    KRow(31, "Al", 13, 29, 0.01943383),
    KRow(32, "Al", 13, 27, 0.01953686),
    KRow(33, "Si", 14, 28, 0.01977223),
    KRow(34, "Si", 14, 29, 0.019577),
    KRow(35, "P", 15, 30, 0.01943093),
    KRow(36, "P", 15, 31, 0.01975465),
    KRow(37, "S", 16, 32, 0.01975493),
    KRow(38, "S", 16, 33, 0.01977075),
    KRow(39, "S", 16, 35, 0.01977043),
    KRow(40, "Cl", 17, 34, 0.01967553),
    KRow(41, "Cl", 17, 35, 0.01974442),
    KRow(42, "Cl", 17, 37, 0.01981747),
    KRow(43, "Ar", 18, 36, 0.01972169),
    KRow(44, "Ar", 18, 38, 0.01984931),
    KRow(45, "K", 19, 38, 0.01949287),
    KRow(46, "Ar", 18, 40, 0.0196945),
    KRow(47, "K", 19, 39, 0.01973092),
    KRow(48, "K", 19, 40, 0.01962977),
    KRow(49, "Ca", 20, 40, 0.01971896),
    KRow(50, "Ar", 18, 41, 0.01397156),
    KRow(51, "Ca", 20, 42, 0.01978483),
    KRow(52, "Ca", 20, 43, 0.01969448),
    KRow(53, "Ca", 20, 45, 0.01984475),
    KRow(54, "Sc", 21, 45, 0.01985941),
    KRow(55, "Ti", 22, 46, 0.01982922),
    KRow(56, "Ti", 22, 47, 0.01986394),
    KRow(57, "Ti", 22, 48, 0.01990625),
    KRow(58, "Ti", 22, 49, 0.0198121),
    KRow(59, "Ti", 22, 50, 0.01989175),
    KRow(60, "V", 23, 51, 0.02001475),
    KRow(61, "Cr", 24, 52, 0.02002203),
    KRow(62, "Cr", 24, 53, 0.0199929),
    KRow(63, "Fe", 26, 54, 0.01986263),
    KRow(64, "Fe", 26, 55, 0.01986871),
    KRow(65, "Fe", 26, 56, 0.01982115),
    KRow(66, "Fe", 26, 57, 0.01979011),
    KRow(67, "Co", 27, 59, 0.02028432),
    KRow(68, "Xe", 54, 130, 0.01900044),
    KRow(69, "Sm", 62, 144, 0.01868499),
    KRow(70, "U", 92, 238, 0.0167848),
    KRow(71, "C", 6, 11, 0.01807981),
    KRow(72, "N", 7, 13, 0.01896535),
    KRow(73, "O", 8, 15, 0.01910168),
    KRow(74, "P", 15, 32, 0.01968318),
    KRow(75, "Cl", 17, 36, 0.01968651),
    KRow(76, "Cl", 17, 39, 0.01956023),
    KRow(77, "Ti", 22, 45, 0.0207741),
    KRow(78, "Ga", 31, 69, 0.0198312),
    KRow(79, "Li", 3, 8, 0.01520925),
    KRow(80, "Al", 13, 26, 0.01924255),
)

# Printed table has Si-29 twice under index 26; stored once.
# Ti-45 repeats the Ti-47 experimental value (406.93) and is flagged.
_TABLE2 = (
    BindingRow(1, "H", 1, 2, 2.2241, -16.77427, -16.31982),
    BindingRow(2, "He", 2, 3, 7.7243, 9.082245, 2.157451),
    BindingRow(3, "He", 2, 4, 28.2937, 27.8039, 30.17239),
    BindingRow(4, "He", 2, 5, 27.3, 26.81005, 22.14478),
    BindingRow(5, "Li", 3, 6, 31.987, 26.92148, 25.56065),
    BindingRow(6, "Li", 3, 7, 39.239, 44.51587, 40.6302),
    BindingRow(7, "Be", 4, 9, 58.153, 62.21107, 59.20402),
    BindingRow(8, "B", 5, 10, 64.744, 65.09291, 63.43464),
    BindingRow(9, "B", 5, 11, 76.192, 79.89884, 77.90697),
    BindingRow(10, "C", 6, 12, 92.156, 91.93594, 92.88525),
    BindingRow(11, "C", 6, 13, 97.102, 97.58096, 96.70341),
    BindingRow(12, "N", 7, 14, 104.653, 101.7856, 101.2442),
    BindingRow(13, "N", 7, 15, 115.485, 115.2586, 115.5511),
    BindingRow(14, "O", 8, 16, 127.612, 126.2815, 128.6358),
    BindingRow(15, "O", 8, 17, 131.754, 132.9324, 134.4133),
    BindingRow(16, "O", 8, 18, 139.798, 143.6057, 145.9268),
    BindingRow(17, "F", 9, 19, 147.79, 150.6031, 153.2602),
    BindingRow(18, "Ne", 10, 20, 160.63, 155.1088, 164.9919),
    BindingRow(19, "Ne", 10, 21, 167.39, 165.3371, 172.0682),
    BindingRow(20, "Ne", 10, 22, 177.76, 178.4066, 184.0856),
    BindingRow(21, "Na", 11, 23, 186.44, 188.8704, 190.8181),
    BindingRow(22, "Mg", 12, 24, 197.52, 201.7219, 201.4773),
    BindingRow(23, "Mg", 12, 25, 204.52, 209.4676, 209.4948),
    BindingRow(24, "Al", 13, 27, 224.944, 227.1289, 228.0859),
    BindingRow(25, "Si", 14, 28, 236.52, 236.7066, 237.8406),
    BindingRow(26, "Si", 14, 29, 242.97, 244.7884, 246.5813),
    BindingRow(27, "P", 15, 31, 262.898, 262.898, 264.9727),
    BindingRow(28, "S", 16, 32, 271.76, 271.7596, 273.9333),
    BindingRow(29, "S", 16, 33, 280.85, 280.0886, 283.2533),
    BindingRow(30, "Cl", 17, 35, 298.19, 297.7577, 301.4175),
    BindingRow(31, "Cl", 17, 37, 317.08, 315.4211, 321.7042),
    BindingRow(32, "Ar", 18, 36, 306.69, 306.8586, 309.6619),
    BindingRow(33, "Ar", 18, 38, 326.49, 324.4332, 332.5948),
    BindingRow(34, "Ar", 18, 40, 341.62, 343.4461, 351.1033),
    BindingRow(35, "K", 19, 38, 320.62, 322.0409, 322.9264),
    BindingRow(36, "K", 19, 39, 333.39, 333.0637, 337.3782),
    BindingRow(37, "Ca", 20, 40, 342.03, 341.9898, 344.9641),
    BindingRow(38, "Ca", 20, 42, 360.93, 359.5778, 368.4792),
    BindingRow(39, "Ca", 20, 43, 368.12, 368.3764, 376.6555),
    BindingRow(40, "Sc", 21, 45, 389.02, 386.026, 394.6564),
    BindingRow(41, "Ti", 22, 45, 406.93, 387.635, 390.3501, suspect=True),
    BindingRow(42, "Ti", 22, 46, 397.32, 394.7425, 403.818),
    BindingRow(43, "Ti", 22, 47, 406.93, 403.6745, 412.5005),
    BindingRow(44, "Ti", 22, 48, 416.73, 412.3411, 424.0958),
    BindingRow(45, "Ti", 22, 49, 423.65, 421.3308, 431.1398),
    BindingRow(46, "Ti", 22, 50, 434.28, 429.99403, 441.0839),
    BindingRow(47, "V", 23, 51, 445.94, 438.9781, 449.2482),
    BindingRow(48, "Cr", 24, 52, 455.08, 447.528, 459.5895),
    BindingRow(49, "Cr", 24, 53, 463.39, 456.6244, 467.1747),
    BindingRow(50, "Fe", 26, 54, 469.27, 465.1136, 472.8117),
    BindingRow(51, "Fe", 26, 56, 486.08, 482.7249, 494.4324),
    BindingRow(52, "Fe", 26, 57, 494.2, 491.9146, 502.4948),
    BindingRow(53, "Co", 27, 59, 524.74, 509.5585, 519.8936),
    BindingRow(54, "Xe", 54, 130, 1195.87, 1257.869, 1189.607),
    BindingRow(55, "Sm", 62, 144, 1780.0, 2086.011, 1790.972),
)

# Rows 6 and 13 (F-18) are printed identically; both kept.
_TABLE3 = (
    DecayRow(1, "H", 1, 3, 0.01891915, 3.815856e8, 0.01891915, "beta_minus"),
    DecayRow(2, "Ca", 20, 45, 0.01984475, 1.31328e7, 0.0198447, "beta_minus"),
    DecayRow(3, "C", 6, 11, 0.01807981, 1340.04, 0.01756255, "beta_plus"),
    DecayRow(4, "N", 7, 13, 0.01896535, 597.9, 0.01780605, "beta_plus"),
    DecayRow(5, "O", 8, 15, 0.01910168, 126.0, 0.01360051, "beta_plus"),
    DecayRow(6, "F", 9, 18, 0.0190572, 6420.0, 0.01894924, "beta_plus"),
    DecayRow(7, "Al", 13, 26, 0.01924255, 2.26e13, 0.01924255, "beta_plus"),
    DecayRow(8, "Al", 13, 29, 0.01943383, 402.0, 0.01770958, "beta_minus"),
    DecayRow(9, "P", 15, 30, 0.01943093, 153.0, 0.01490055, "beta_plus"),
    DecayRow(10, "Si", 14, 31, 0.0195335, 9438.0, 0.01945991, "beta_minus"),
    DecayRow(11, "P", 15, 32, 0.01968318, 1232237.0, 0.01968262, "beta_minus"),
    DecayRow(12, "S", 16, 35, 0.01977043, 7560864.0, 0.01977034, "beta_minus"),
    DecayRow(13, "F", 9, 18, 0.0190572, 6420.0, 0.01894924, "beta_plus"),
    DecayRow(14, "Cl", 17, 39, 0.01956023, 3600.0, 0.01936769, "beta_minus"),
)


@dataclass(frozen=True)
class AppendixFixtures:
    table1: tuple[KRow, ...]
    table2: tuple[BindingRow, ...]
    table3: tuple[DecayRow, ...]


_FIXTURES = AppendixFixtures(_TABLE1, _TABLE2, _TABLE3)


def fixtures() -> AppendixFixtures:
    """Return the shared, immutable reference tables."""
    return _FIXTURES
