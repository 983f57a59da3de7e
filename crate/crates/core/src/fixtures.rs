//! Worked examples with known decompositions and verdicts.

use crate::ideal::{MonomialIdeal, VarMask, VariableSet};
use crate::text::parse_ideal;

pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
}

impl Fixture {
    pub fn ideal(&self) -> MonomialIdeal {
        parse_ideal(self.text).expect("fixture parses").ideal
    }
}

/// Connected in codimension one with an embedded component; not gCM.
pub const MIXED_CONNECTED: Fixture =
    Fixture { name: "mixed-connected", text: "vars x1,x2,x3\n(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)" };

/// Unmixed matroidal, not gCM.
pub const UNMIXED_MATROIDAL_NOT_GCM: Fixture =
    Fixture { name: "unmixed-matroidal-not-gcm", text: "vars u,x,y,z,w\n(u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)" };

/// `(x1) ∩ (x2^2) ∩ m^4`.
pub const GCM_CLAUSES_AB: Fixture = Fixture { name: "gcm-clauses-ab", text: "vars x1,x2\n(x1*x2^3, x1^2*x2^2)" };

/// `(x1) ∩ (x2) ∩ m^3`.
pub const GCM_CLAUSES_AC: Fixture =
    Fixture { name: "gcm-clauses-ac", text: "vars x1,x2,x3\n(x1^2*x2, x1*x2^2, x1*x2*x3)" };

/// `(x1,x2,x3,x4) ∩ (x3,x4,x5,x6) ∩ (x1,x2,x5,x6)`.
pub const GCM_CLAUSES_BC: Fixture = Fixture {
    name: "gcm-clauses-bc",
    text: "vars x1,x2,x3,x4,x5,x6\n(x1*x5, x1*x6, x2*x5, x2*x6, x3*x1, x3*x2, x3*x5, x3*x6, x4*x1, x4*x2, x4*x5, x4*x6)",
};

/// `(x1,x2) ∩ (x2,x3)^2 ∩ m^3`.
pub const GCM_VIA_PRIME_SUMS: Fixture =
    Fixture { name: "gcm-via-prime-sums", text: "vars x1,x2,x3\n(x1*x2^2, x2^3, x2^2*x3, x1*x2*x3, x1*x3^2, x2*x3^2)" };

/// Equidimensional with an embedded prime.
pub const EQUIDIM_NOT_UNMIXED: Fixture =
    Fixture { name: "equidim-not-unmixed", text: "vars x1,x2,x3\n(x1^2, x1*x2, x1*x3, x2*x3)" };

pub const ALL: [Fixture; 7] = [
    MIXED_CONNECTED,
    UNMIXED_MATROIDAL_NOT_GCM,
    GCM_CLAUSES_AB,
    GCM_CLAUSES_AC,
    GCM_CLAUSES_BC,
    GCM_VIA_PRIME_SUMS,
    EQUIDIM_NOT_UNMIXED,
];

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    ALL.iter().find(|f| f.name == name)
}

/// `J` with `I = J ∩ m^s` for the three clause fixtures, in that order.
pub fn clause_fixture_splits() -> [(MonomialIdeal, u32); 3] {
    let v2 = VariableSet::indexed(2);
    let v3 = VariableSet::indexed(3);
    let v6 = VariableSet::indexed(6);
    let prime = |v: &VariableSet, idx: &[usize], a: u32| {
        MonomialIdeal::prime_power(v.clone(), VarMask::from_indices(idx.iter().copied()), a)
    };
    let ab = prime(&v2, &[0], 1).intersection(&prime(&v2, &[1], 2)).expect("same ring");
    let ac = prime(&v3, &[0], 1).intersection(&prime(&v3, &[1], 1)).expect("same ring");
    let bc = MonomialIdeal::intersect_all(
        &v6,
        &[prime(&v6, &[0, 1, 2, 3], 1), prime(&v6, &[2, 3, 4, 5], 1), prime(&v6, &[0, 1, 4, 5], 1)],
    )
    .expect("same ring");
    [(ab, 4), (ac, 3), (bc, 0)]
}
