use serde::Serialize;

use crate::code::{CodeParams, CubeGenerator, PauliConfig, Site};
use crate::conditions::check_deformability;
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpVector};
use crate::oracle::PlaneOrientation;

/// Box `0 <= u < width`, `0 <= v < height`, `0 <= t < length` in the frame of `orientation`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlattenBox {
    pub width: usize,
    pub height: usize,
    pub length: usize,
    pub orientation: PlaneOrientation,
}

impl FlattenBox {
    pub fn new(width: usize, height: usize, length: usize) -> Self {
        Self { width, height, length, orientation: PlaneOrientation::default() }
    }

    pub fn contains(&self, s: Site) -> bool {
        let (t, u, v) = self.orientation.frame(s);
        (0..self.length as i64).contains(&t)
            && (0..self.width as i64).contains(&u)
            && (0..self.height as i64).contains(&v)
    }

    /// Inside the length range and on one of the two faces `u = 0`, `v = 0`.
    pub fn on_profile(&self, s: Site) -> bool {
        let (t, u, v) = self.orientation.frame(s);
        (0..self.length as i64).contains(&t) && (u == 0 || v == 0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Flattened {
    pub config: PauliConfig,
    /// Cube origins and exponents multiplied into the input.
    pub applied: Vec<(Site, u32)>,
}

/// Push an operator inside `bx` onto the two faces `u = 0` and `v = 0` by
/// multiplying in generators, sweeping the lines parallel to the length
/// axis from the far corner inwards. Generators may poke one step past either
/// end of the length range.
pub fn flatten_segment(params: &CodeParams, config: &PauliConfig, bx: FlattenBox) -> Result<Flattened> {
    if !check_deformability(params) {
        return Err(Error::PrerequisiteFailed("deformability".into()));
    }
    if let Some(s) = config.sites().find(|&s| !bx.contains(s)) {
        return Err(Error::DegenerateGeometry(format!("site {s:?} lies outside the box")));
    }
    let m = params.modulus();
    let generator = CubeGenerator::new(params);
    let o = bx.orientation;
    let corner_label = |dt: i64| {
        let v = o.site(dt, 1, 1).0.map(|c| c as u8);
        generator.label(v)
    };
    let (near, far) = (corner_label(0), corner_label(1));

    let mut lines: Vec<(i64, i64)> =
        (1..bx.width as i64).flat_map(|u| (1..bx.height as i64).map(move |v| (u, v))).collect();
    lines.sort_by_key(|&(u, v)| (std::cmp::Reverse(u + v), std::cmp::Reverse(u)));

    let l = bx.length as i64;
    let mut current = config.clone();
    let mut applied = Vec::new();
    for (u, v) in lines {
        let line: Vec<Site> = (0..l).map(|t| o.site(t, u, v)).collect();
        if line.iter().all(|&s| current.get(s).is_zero()) {
            continue;
        }
        // unknown k <-> cube at length origin k - 1; site t sees cubes t (near) and t - 1 (far)
        let mut a = FpMatrix::zeros(m, 2 * bx.length, bx.length + 1);
        let mut rhs = Vec::with_capacity(2 * bx.length);
        for (t, &s) in line.iter().enumerate() {
            for (c, (n, f)) in [(near.x(), far.x()), (near.z(), far.z())].into_iter().enumerate() {
                a.set(2 * t + c, t + 1, n.value() as i64);
                a.set(2 * t + c, t, f.value() as i64);
            }
            let here = -current.get(s);
            rhs.extend([here.x().value() as i64, here.z().value() as i64]);
        }
        let coeffs = a.solve(&FpVector::from_i64(m, &rhs)).ok_or_else(|| {
            let site = *line.iter().find(|&&s| !current.get(s).is_zero()).expect("nonzero line");
            Error::FlattenFailed { site }
        })?;
        for (k, &c) in coeffs.as_slice().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let origin = o.site(k as i64 - 1, u - 1, v - 1);
            current = current.mul(&generator.at(origin).pow(c as i64))?;
            applied.push((origin, c));
        }
    }
    Ok(Flattened { config: current, applied })
}
