use serde::Serialize;

use crate::code::{Axis, CodeParams, SympPair};
use crate::conditions::{base_matrix, check_deformability, direction_transition, minimal_string_det, rel_transition};
use crate::error::{Error, Result};
use crate::fp::{krylov_min_poly, FpMatrix};
use crate::oracle::{build_segment_constraints, solve_geometry, PlaneOrientation, SegmentGeometry, SegmentKind};

/// Block elimination of a flat segment system.
///
/// Each column pair `(j, j+1)` contributes rows `[P | Q]`. With `E P = [I; 0]`
/// and `E Q = [T; V]`, the system becomes `x_j = -T x_{j+1}` plus `V x_{j+1} = 0`,
/// and everything collapses onto the last column through `A`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub width: usize,
    pub length: usize,
    /// `T` of the first column pair.
    pub transfer: FpMatrix,
    /// `V` of the first column pair.
    pub residual_rows: FpMatrix,
    /// Stack of `V_j` pushed onto the last column.
    pub residual: FpMatrix,
    /// `V (-T)^m` for `m < 2w`.
    pub saturated: FpMatrix,
    /// Degree of the minimal polynomial of `T^t` on each row of `V`.
    pub krylov_degrees: Vec<usize>,
    pub block_triangular: FpMatrix,
    pub rank: usize,
    pub rank_bound: usize,
    pub nullspace_dim: usize,
}

pub fn canonical_reduction(params: &CodeParams, width: usize, length: usize) -> Result<CanonicalForm> {
    canonical_reduction_oriented(params, width, length, PlaneOrientation::default())
}

pub fn canonical_reduction_oriented(
    params: &CodeParams,
    width: usize,
    length: usize,
    orientation: PlaneOrientation,
) -> Result<CanonicalForm> {
    let m = params.modulus();
    let geom = SegmentGeometry::new(SegmentKind::Flat, width, length, orientation)?;
    let sys = build_segment_constraints(params, &geom)?;
    let n = 2 * width;
    let t_of = |site: crate::code::Site| orientation.frame(site).0;

    let mut transfers = Vec::with_capacity(length - 1);
    let mut residuals = Vec::with_capacity(length - 1);
    for j in 0..length - 1 {
        let rows: Vec<usize> = (0..sys.row_cubes.len()).filter(|&r| t_of(sys.row_cubes[r]) == j as i64).collect();
        let block = sys.matrix.select_rows(&rows);
        let p = block.select_columns(&sys.columns_of(j).collect::<Vec<_>>());
        let q = block.select_columns(&sys.columns_of(j + 1).collect::<Vec<_>>());
        let r = rows.len();
        let (reduced, pivots) = p.hstack(&FpMatrix::identity(m, r))?.rref();
        if pivots.iter().take_while(|&&c| c < n).count() < n {
            return Err(Error::PivotFailure { column: j });
        }
        let e = reduced.block(0, n, r, r);
        let eq = e.mul(&q)?;
        transfers.push(eq.block(0, 0, n, n));
        residuals.push(eq.block(n, 0, r - n, n));
    }

    // x_m = M_m x_{l-1}, M_{l-1} = I, M_m = -T_m M_{m+1}
    let mut carry = vec![FpMatrix::identity(m, n); length];
    for j in (0..length - 1).rev() {
        carry[j] = transfers[j].neg().mul(&carry[j + 1])?;
    }
    let mut residual = residuals[0].mul(&carry[1])?;
    for j in 1..length - 1 {
        residual = residual.vstack(&residuals[j].mul(&carry[j + 1])?)?;
    }

    let rows_top = n * (length - 1);
    let mut tri = FpMatrix::zeros(m, rows_top + residual.rows(), n * length);
    for (j, t) in transfers.iter().enumerate() {
        tri.set_block(n * j, n * j, &FpMatrix::identity(m, n));
        tri.set_block(n * j, n * (j + 1), t);
    }
    tri.set_block(rows_top, n * (length - 1), &residual);

    let v = residuals[0].clone();
    let neg_t = transfers[0].neg();
    let mut saturated = v.clone();
    let mut power = v.clone();
    for _ in 1..n {
        power = power.mul(&neg_t)?;
        saturated = saturated.vstack(&power)?;
    }
    let tt = transfers[0].transpose();
    let krylov_degrees = (0..v.rows())
        .map(|i| krylov_min_poly(&tt, &v.row(i)).map(|p| p.degree().unwrap_or(0)))
        .collect::<Result<Vec<_>>>()?;

    let res_rank = residual.rank();
    let rank = tri.rank();
    Ok(CanonicalForm {
        width,
        length,
        transfer: transfers[0].clone(),
        residual_rows: v,
        residual,
        saturated,
        krylov_degrees,
        block_triangular: tri,
        rank,
        rank_bound: rows_top + res_rank,
        nullspace_dim: n * length - rank,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Width1Direction {
    pub direction: Axis,
    /// `det(T - T^-1)`, absent when the transfer matrix does not exist.
    pub det: Option<u32>,
    /// Longest length in the scan with a nontrivial width-1 segment.
    pub oracle_max_length: Option<usize>,
    /// The determinant says "no string" exactly when the oracle finds none.
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Width1Report {
    pub directions: Vec<Width1Direction>,
    pub l_max: usize,
    pub agrees: bool,
}

/// Compare the width-1 determinant test with the oracle on lengths `2..=l_max`.
pub fn width1_criterion(params: &CodeParams, l_max: usize) -> Result<Width1Report> {
    let deformable = check_deformability(params);
    let mut directions = Vec::new();
    for dir in Axis::ALL {
        let det = if deformable { Some(minimal_string_det(&direction_transition(params, dir)?)?) } else { None };
        let mut oracle_max_length = None;
        for length in 2..=l_max {
            for orientation in PlaneOrientation::along(dir) {
                let g = SegmentGeometry::new(SegmentKind::Flat, 1, length, orientation)?;
                if solve_geometry(params, &g)?.nontrivial {
                    oracle_max_length = Some(length);
                }
            }
        }
        let det_says_none = det.is_some_and(|d| d != 0);
        let agrees = det.is_none() || det_says_none == oracle_max_length.is_none();
        directions.push(Width1Direction { direction: dir, det, oracle_max_length, agrees });
    }
    let agrees = directions.iter().all(|d| d.agrees);
    Ok(Width1Report { directions, l_max, agrees })
}

#[derive(Clone, Debug, Serialize)]
pub struct CornerCheck {
    pub corner_matrix: Vec<Vec<u32>>,
    pub det: u32,
    /// `<alpha,gamma> <alpha,delta> <delta,alpha>`.
    pub claimed: u32,
    pub matches: bool,
    /// `<alpha,gamma> <alpha,delta>^2`, the claim with the last sign flipped.
    pub claimed_flipped: u32,
    pub matches_flipped: bool,
}

/// The corner transfer matrix, built without inverting the zero-row base matrices.
pub fn corner_check(params: &CodeParams) -> Result<CornerCheck> {
    let m = params.modulus();
    let [a, b, c, d] = params.pairs();
    let zero = SympPair::zero(m);
    let den_inv = base_matrix(c, a).inverse().map_err(|_| Error::SingularDenominator)?;
    let first = den_inv.matrix().mul(base_matrix(d, zero).matrix())?;
    let hop = rel_transition((b, d), (c, a))?;
    let second = hop.matrix().mul(&den_inv.matrix().mul(base_matrix(a, zero).matrix())?)?;
    let t_int = first.sub(&second)?;
    let det = t_int.det()?.value();
    let prod = |x: SympPair, y: SympPair| x.symplectic(y).expect("same modulus");
    let claimed = (prod(a, c) * prod(a, d) * prod(d, a)).value();
    let claimed_flipped = (prod(a, c) * prod(a, d) * prod(a, d)).value();
    Ok(CornerCheck {
        corner_matrix: t_int.to_rows(),
        det,
        claimed,
        matches: det == claimed,
        claimed_flipped,
        matches_flipped: det == claimed_flipped,
    })
}
