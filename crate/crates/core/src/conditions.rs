//! Transition matrices and the three algebraic no-string conditions.

use serde::Serialize;

use crate::code::{Axis, CodeParams, Label, SympPair};
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, PrimeModulus};

/// A 2x2 matrix over F_p propagating a boundary pair along an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix(FpMatrix);

impl TransitionMatrix {
    pub fn new(m: FpMatrix) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::DimensionMismatch(format!("transition matrix is {}x{}", m.rows(), m.cols())));
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> FpMatrix {
        self.0
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.0.modulus()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.mul(&other.0)?))
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self(self.0.inverse()?))
    }

    pub fn det(&self) -> u32 {
        self.0.det().expect("square").value()
    }
}

/// `[[A1, -A2], [C1, -C2]]`.
pub fn base_matrix(a: SympPair, c: SympPair) -> TransitionMatrix {
    let [a1, a2] = a.raw().map(i64::from);
    let [c1, c2] = c.raw().map(i64::from);
    TransitionMatrix(FpMatrix::from_rows(a.modulus(), &[vec![a1, -a2], vec![c1, -c2]]).expect("2x2"))
}

/// `base(den)^-1 base(num)`.
pub fn rel_transition(num: (SympPair, SympPair), den: (SympPair, SympPair)) -> Result<TransitionMatrix> {
    let d = base_matrix(den.0, den.1);
    let inv = d.inverse().map_err(|_| Error::SingularDenominator)?;
    inv.mul(&base_matrix(num.0, num.1))
}

/// All six pairwise products among the defining pairs are nonzero.
pub fn check_deformability(params: &CodeParams) -> bool {
    pairwise_products(params).iter().all(|&(_, _, v)| v != 0)
}

fn pairwise_products(params: &CodeParams) -> Vec<(Label, Label, u32)> {
    let mut out = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (Label::ALL[i], Label::ALL[j]);
            let v = params.pair(a).symplectic(params.pair(b)).expect("same modulus").value();
            out.push((a, b, v));
        }
    }
    out
}

/// The width-1 transfer matrix along `dir`, with the inversion sign applied
/// to the antipodal label in the denominator. Equal to the plain
/// label form for symmetric codes.
pub fn direction_transition(params: &CodeParams, dir: Axis) -> Result<TransitionMatrix> {
    let s = params.parity().sign();
    let [a, b, c, d] = params.pairs();
    match dir {
        Axis::X => rel_transition((d, a), (c.scale(s), b)),
        Axis::Y => rel_transition((a, d), (c, b.scale(s))),
        Axis::Z => rel_transition((a, b), (d, c.scale(s))),
    }
}

/// The plain label form, ignoring the inversion sign.
pub fn direction_transition_unsigned(params: &CodeParams, dir: Axis) -> Result<TransitionMatrix> {
    let [a, b, c, d] = params.pairs();
    match dir {
        Axis::X => rel_transition((d, a), (c, b)),
        Axis::Y => rel_transition((a, d), (c, b)),
        Axis::Z => rel_transition((a, b), (d, c)),
    }
}

/// `det(T - T^-1)`.
pub fn minimal_string_det(t: &TransitionMatrix) -> Result<u32> {
    let inv = t.inverse()?;
    Ok(t.0.sub(&inv.0)?.det()?.value())
}

/// True when `det(T - T^-1) != 0`, so no width-1 string runs along `T`.
pub fn minimal_string_flag(t: &TransitionMatrix) -> Result<bool> {
    Ok(minimal_string_det(t)? != 0)
}

pub fn check_no_minimal_string(params: &CodeParams) -> Result<[bool; 3]> {
    if !check_deformability(params) {
        return Err(Error::PrerequisiteFailed("deformability".into()));
    }
    let mut out = [false; 3];
    for (flag, dir) in out.iter_mut().zip(Axis::ALL) {
        *flag = minimal_string_flag(&direction_transition(params, dir)?)?;
    }
    Ok(out)
}

/// The three ways to split the labels into two pairs.
pub const PAIRINGS: [[Label; 4]; 3] = [
    [Label::Alpha, Label::Beta, Label::Gamma, Label::Delta],
    [Label::Alpha, Label::Gamma, Label::Beta, Label::Delta],
    [Label::Alpha, Label::Delta, Label::Beta, Label::Gamma],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingSquares {
    pub pairing: String,
    pub left: u32,
    pub right: u32,
    pub left_squared: u32,
    pub right_squared: u32,
    pub distinct_mod_p: bool,
    pub left_integer: i64,
    pub right_integer: i64,
    pub distinct_as_integers: bool,
}

fn pairing_name(p: [Label; 4]) -> String {
    let c = |l: Label| match l {
        Label::Alpha => 'a',
        Label::Beta => 'b',
        Label::Gamma => 'g',
        Label::Delta => 'd',
    };
    format!("{}{}|{}{}", c(p[0]), c(p[1]), c(p[2]), c(p[3]))
}

fn integer_product(a: SympPair, b: SympPair) -> i64 {
    let [a1, a2] = a.centered();
    let [b1, b2] = b.centered();
    a1 * b2 - a2 * b1
}

/// Both readings of the squared-pairing condition for each split.
pub fn pairing_squares(params: &CodeParams) -> Vec<PairingSquares> {
    PAIRINGS
        .iter()
        .map(|&pairing| {
            let [a, b, c, d] = pairing.map(|l| params.pair(l));
            let left = a.symplectic(b).expect("same modulus");
            let right = c.symplectic(d).expect("same modulus");
            let (ls, rs) = ((left * left).value(), (right * right).value());
            let (li, ri) = (integer_product(a, b), integer_product(c, d));
            PairingSquares {
                pairing: pairing_name(pairing),
                left: left.value(),
                right: right.value(),
                left_squared: ls,
                right_squared: rs,
                distinct_mod_p: ls != rs,
                left_integer: li,
                right_integer: ri,
                distinct_as_integers: li * li != ri * ri,
            }
        })
        .collect()
}

/// Squared products of each pairing differ in F_p.
pub fn check_pairing_squares(params: &CodeParams) -> [bool; 3] {
    let v = pairing_squares(params);
    [v[0].distinct_mod_p, v[1].distinct_mod_p, v[2].distinct_mod_p]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionDetail {
    pub direction: Axis,
    pub transition: Vec<Vec<u32>>,
    pub det_t_minus_inverse: u32,
    pub unsigned_transition: Vec<Vec<u32>>,
    pub unsigned_det_t_minus_inverse: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremDetails {
    pub products: Vec<(Label, Label, u32)>,
    pub directions: Vec<DirectionDetail>,
    pub pairings: Vec<PairingSquares>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub deformability: bool,
    pub minimal_string: [bool; 3],
    pub pairing_squares: [bool; 3],
    pub overall: bool,
    pub details: TheoremDetails,
    pub discrepancies: Vec<String>,
}

impl TheoremReport {
    /// Conditions one and two.
    pub fn first_two(&self) -> bool {
        self.deformability && self.minimal_string.iter().all(|&f| f)
    }
}

pub fn theorem1_report(params: &CodeParams) -> TheoremReport {
    let deformability = check_deformability(params);
    let mut directions = Vec::new();
    let mut minimal_string = [false; 3];
    let mut discrepancies = Vec::new();
    if deformability {
        for (i, dir) in Axis::ALL.into_iter().enumerate() {
            let t = direction_transition(params, dir).expect("deformable");
            let u = direction_transition_unsigned(params, dir).expect("deformable");
            let det = minimal_string_det(&t).expect("invertible");
            let udet = minimal_string_det(&u).expect("invertible");
            minimal_string[i] = det != 0;
            if (det != 0) != (udet != 0) {
                discrepancies.push(format!(
                    "direction {dir:?}: signed transfer matrix gives det {det}, unsigned label form gives {udet}"
                ));
            }
            directions.push(DirectionDetail {
                direction: dir,
                transition: t.matrix().to_rows(),
                det_t_minus_inverse: det,
                unsigned_transition: u.matrix().to_rows(),
                unsigned_det_t_minus_inverse: udet,
            });
        }
    }
    let pairings = pairing_squares(params);
    let pairing_flags = [pairings[0].distinct_mod_p, pairings[1].distinct_mod_p, pairings[2].distinct_mod_p];
    for ps in &pairings {
        if ps.distinct_mod_p != ps.distinct_as_integers {
            discrepancies.push(format!(
                "pairing {}: squares {} vs {} mod p ({}), centered integers {} vs {} ({})",
                ps.pairing,
                ps.left_squared,
                ps.right_squared,
                if ps.distinct_mod_p { "distinct" } else { "equal" },
                ps.left_integer * ps.left_integer,
                ps.right_integer * ps.right_integer,
                if ps.distinct_as_integers { "distinct" } else { "equal" },
            ));
        }
    }
    let overall = deformability && minimal_string.iter().all(|&f| f) && pairing_flags.iter().all(|&f| f);
    TheoremReport {
        deformability,
        minimal_string,
        pairing_squares: pairing_flags,
        overall,
        details: TheoremDetails { products: pairwise_products(params), directions, pairings },
        discrepancies,
    }
}
