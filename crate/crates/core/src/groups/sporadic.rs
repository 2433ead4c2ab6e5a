use crate::arith::FactoredInt;

/// The 26 sporadic simple groups, in order of increasing size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    J1,
    M22,
    J2,
    M23,
    HS,
    J3,
    M24,
    McL,
    He,
    Ru,
    Suz,
    ON,
    Co3,
    Co2,
    Fi22,
    HN,
    Ly,
    Th,
    Fi23,
    Co1,
    J4,
    Fi24,
    B,
    M,
}

type Row = (Sporadic, &'static str, &'static [(u64, u32)]);

const TABLE: [Row; 26] = [
    (Sporadic::M11, "M11", &[(2, 4), (3, 2), (5, 1), (11, 1)]),
    (Sporadic::M12, "M12", &[(2, 6), (3, 3), (5, 1), (11, 1)]),
    (Sporadic::J1, "J1", &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)]),
    (Sporadic::M22, "M22", &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)]),
    (Sporadic::J2, "J2", &[(2, 7), (3, 3), (5, 2), (7, 1)]),
    (Sporadic::M23, "M23", &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)]),
    (Sporadic::HS, "HS", &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)]),
    (Sporadic::J3, "J3", &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)]),
    (Sporadic::M24, "M24", &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)]),
    (Sporadic::McL, "McL", &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)]),
    (Sporadic::He, "He", &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)]),
    (Sporadic::Ru, "Ru", &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)]),
    (Sporadic::Suz, "Suz", &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)]),
    (
        Sporadic::ON,
        "O'N",
        &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
    ),
    (Sporadic::Co3, "Co3", &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)]),
    (Sporadic::Co2, "Co2", &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)]),
    (Sporadic::Fi22, "Fi22", &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)]),
    (Sporadic::HN, "HN", &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)]),
    (
        Sporadic::Ly,
        "Ly",
        &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)],
    ),
    (
        Sporadic::Th,
        "Th",
        &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
    ),
    (
        Sporadic::Fi23,
        "Fi23",
        &[(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)],
    ),
    (
        Sporadic::Co1,
        "Co1",
        &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
    ),
    (
        Sporadic::J4,
        "J4",
        &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)],
    ),
    (
        Sporadic::Fi24,
        "Fi24'",
        &[(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)],
    ),
    (
        Sporadic::B,
        "B",
        &[
            (2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1),
            (31, 1), (47, 1),
        ],
    ),
    (
        Sporadic::M,
        "M",
        &[
            (2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1), (23, 1),
            (29, 1), (31, 1), (41, 1), (47, 1), (59, 1), (71, 1),
        ],
    ),
];

impl Sporadic {
    pub fn all() -> impl Iterator<Item = Sporadic> {
        TABLE.iter().map(|row| row.0)
    }

    pub fn name(self) -> &'static str {
        TABLE[self as usize].1
    }

    /// Accepts the canonical names plus `F1` (Monster), `F2` (Baby Monster)
    /// and `ON`.
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "F1" => return Some(Sporadic::M),
            "F2" => return Some(Sporadic::B),
            "ON" => return Some(Sporadic::ON),
            _ => {}
        }
        TABLE.iter().find(|row| row.1 == s).map(|row| row.0)
    }

    pub fn order_factors(self) -> &'static [(u64, u32)] {
        TABLE[self as usize].2
    }

    pub fn order(self) -> FactoredInt {
        self.order_factors()
            .iter()
            .fold(FactoredInt::one(), |acc, &(p, e)| {
                acc.mul(&FactoredInt::from_u64(p).expect("nonzero").pow(e))
            })
    }
}
