//! Planar logical operators, generator products and encoded-qudit counts on tori.

use serde::Serialize;

use crate::code::{Axis, CodeParams, CubeGenerator, Label, PauliConfig, Site, SympPair, TorusDims};
use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpVector};

/// Stabilizer group of a code on a torus, one generator per cube.
#[derive(Clone, Debug)]
pub struct TorusCode {
    params: CodeParams,
    dims: TorusDims,
    generator: CubeGenerator,
    /// Row `i` is the cube at the `i`-th site of `dims.sites()`; site `k` owns columns `2k`, `2k + 1`.
    matrix: FpMatrix,
}

impl TorusCode {
    pub fn new(params: &CodeParams, dims: TorusDims) -> Result<Self> {
        Self::with_generator(params, CubeGenerator::new(params), dims)
    }

    /// Build from an explicit generator; fails with `InvalidCode` unless all translates commute.
    pub fn with_generator(params: &CodeParams, generator: CubeGenerator, dims: TorusDims) -> Result<Self> {
        let n = dims.volume();
        let m = params.modulus();
        let mut matrix = FpMatrix::zeros(m, n, 2 * n);
        for (r, origin) in dims.sites().enumerate() {
            for (d, pair) in generator.vertices() {
                let k = dims.index(origin.offset(d));
                let [x, z] = pair.raw();
                matrix.set(r, 2 * k, (matrix.get(r, 2 * k).value() + x) as i64);
                matrix.set(r, 2 * k + 1, (matrix.get(r, 2 * k + 1).value() + z) as i64);
            }
        }
        let code = Self { params: *params, dims, generator, matrix };
        code.check_abelian()?;
        Ok(code)
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }

    pub fn qudits(&self) -> usize {
        self.dims.volume()
    }

    /// Columns reordered as `(z, -x)` so that `G Omega G^t` is a plain product.
    fn twisted(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.matrix.modulus(), self.matrix.rows(), self.matrix.cols());
        for r in 0..self.matrix.rows() {
            for k in 0..self.qudits() {
                t.set(r, 2 * k, self.matrix.get(r, 2 * k + 1).value() as i64);
                t.set(r, 2 * k + 1, -(self.matrix.get(r, 2 * k).value() as i64));
            }
        }
        t
    }

    fn check_abelian(&self) -> Result<()> {
        let form = self.matrix.mul(&self.twisted().transpose())?;
        if let Some((i, j)) = (0..form.rows())
            .flat_map(|i| (0..form.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| !form.get(i, j).is_zero())
        {
            let sites: Vec<Site> = self.dims.sites().collect();
            return Err(Error::InvalidCode(format!("cubes at {:?} and {:?}", sites[i], sites[j])));
        }
        Ok(())
    }

    pub fn generator_at(&self, origin: Site) -> PauliConfig {
        self.generator.at_on_torus(origin, self.dims)
    }

    pub fn vector_of(&self, c: &PauliConfig) -> FpVector {
        let mut data = vec![0i64; 2 * self.qudits()];
        for (s, p) in c.iter() {
            let k = self.dims.index(s);
            let [x, z] = p.raw();
            data[2 * k] += x as i64;
            data[2 * k + 1] += z as i64;
        }
        FpVector::from_i64(self.params.modulus(), &data)
    }
}

/// Commutes with every generator on the torus.
pub fn is_logical(config: &PauliConfig, torus: &TorusCode) -> bool {
    let m = torus.params.modulus();
    torus.dims.sites().all(|origin| {
        let mut e = m.zero();
        for (d, g) in torus.generator.vertices() {
            let here = config.get(torus.dims.wrap(origin.offset(d)));
            e = e + g.symplectic(here).expect("same modulus");
        }
        e.is_zero()
    })
}

/// A 2x2 tile of signed labels laid across the plane `normal = level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarPattern {
    /// `tile[i][j]` sits at in-plane coordinates `(i, j)` mod 2.
    pub tile: [[(Label, i64); 2]; 2],
    pub normal: Axis,
    pub level: i64,
    pub offset: (i64, i64),
}

/// The two in-plane axes for a normal, in increasing order.
pub fn plane_axes(normal: Axis) -> (Axis, Axis) {
    match normal {
        Axis::X => (Axis::Y, Axis::Z),
        Axis::Y => (Axis::X, Axis::Z),
        Axis::Z => (Axis::X, Axis::Y),
    }
}

fn vertex_label(v: [u8; 3], sign: i64) -> (Label, i64) {
    let (base, flip) = if v.iter().filter(|&&c| c == 1).count() >= 2 { (v.map(|c| 1 - c), sign) } else { (v, 1) };
    let label = match base {
        [0, 0, 0] => Label::Alpha,
        [1, 0, 0] => Label::Beta,
        [0, 1, 0] => Label::Gamma,
        _ => Label::Delta,
    };
    (label, flip)
}

impl PlanarPattern {
    /// The face of the cube generator lying in the plane `normal = 0`.
    pub fn face(normal: Axis, parity: crate::code::Parity) -> Self {
        let (a, b) = plane_axes(normal);
        let mut tile = [[(Label::Alpha, 1); 2]; 2];
        for i in 0..2u8 {
            for j in 0..2u8 {
                let mut v = [0u8; 3];
                v[a.index()] = i;
                v[b.index()] = j;
                tile[i as usize][j as usize] = vertex_label(v, parity.sign());
            }
        }
        Self { tile, normal, level: 0, offset: (0, 0) }
    }

    /// Same tile with its two in-plane coordinates exchanged.
    pub fn transposed(self) -> Self {
        let t = self.tile;
        Self { tile: [[t[0][0], t[1][0]], [t[0][1], t[1][1]]], ..self }
    }

    pub fn shifted(self, da: i64, db: i64) -> Self {
        Self { offset: (self.offset.0 + da, self.offset.1 + db), ..self }
    }

    pub fn labels(&self) -> [Label; 4] {
        [self.tile[0][0].0, self.tile[0][1].0, self.tile[1][0].0, self.tile[1][1].0]
    }

    fn pair_at(&self, params: &CodeParams, a: i64, b: i64) -> SympPair {
        let (label, sign) =
            self.tile[(a + self.offset.0).rem_euclid(2) as usize][(b + self.offset.1).rem_euclid(2) as usize];
        params.pair(label).scale(sign)
    }
}

/// Product of several patterns on the same plane. Fails with `WrapSeam` when
/// the combined layout is not periodic along an odd side.
pub fn build_pattern_product(patterns: &[PlanarPattern], params: &CodeParams, torus: TorusDims) -> Result<PauliConfig> {
    let first = patterns.first().ok_or_else(|| Error::DegenerateGeometry("no patterns".into()))?;
    let (ax, bx) = plane_axes(first.normal);
    let (la, lb) = (torus.side(ax.index()), torus.side(bx.index()));
    let value =
        |a: i64, b: i64| patterns.iter().fold(SympPair::zero(params.modulus()), |acc, p| acc + p.pair_at(params, a, b));
    for (axis, side) in [(ax, la), (bx, lb)] {
        if side % 2 == 1 {
            let shift = |a: i64, b: i64| if axis == ax { (a + 1, b) } else { (a, b + 1) };
            let periodic = (0..2).all(|a| {
                (0..2).all(|b| {
                    let (a2, b2) = shift(a, b);
                    value(a, b) == value(a2, b2)
                })
            });
            if !periodic {
                return Err(Error::WrapSeam { axis: axis.name() });
            }
        }
    }
    let mut c = PauliConfig::on_torus(params.modulus(), torus);
    for a in 0..la {
        for b in 0..lb {
            let mut coords = [0i64; 3];
            coords[ax.index()] = a;
            coords[bx.index()] = b;
            coords[first.normal.index()] = first.level;
            c.set(Site(coords), value(a, b));
        }
    }
    Ok(c)
}

pub fn build_planar_operator(pattern: &PlanarPattern, params: &CodeParams, torus: TorusDims) -> Result<PauliConfig> {
    build_pattern_product(std::slice::from_ref(pattern), params, torus)
}

/// Translate groups tried by the census: the four single tiles, the four
/// pairs differing by one unit step, and the product of all four.
pub fn census_shift_groups() -> Vec<Vec<(i64, i64)>> {
    vec![
        vec![(0, 0)],
        vec![(1, 0)],
        vec![(0, 1)],
        vec![(1, 1)],
        vec![(0, 0), (1, 0)],
        vec![(0, 1), (1, 1)],
        vec![(0, 0), (0, 1)],
        vec![(1, 0), (1, 1)],
        vec![(0, 0), (1, 0), (0, 1), (1, 1)],
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientationCensus {
    pub normal: Axis,
    pub in_plane_sides: (i64, i64),
    /// Constructions that fit the torus.
    pub candidates: usize,
    /// Those among them commuting with every generator.
    pub logical: usize,
    /// Independent planar logical operators among them.
    pub count: usize,
}

/// Planar logical operators from the face tile and its transpose for each normal.
pub fn planar_census(params: &CodeParams, dims: TorusDims) -> Result<Vec<OrientationCensus>> {
    let torus = TorusCode::new(params, dims)?;
    let mut out = Vec::new();
    for normal in Axis::ALL {
        let (a, b) = plane_axes(normal);
        let face = PlanarPattern::face(normal, params.parity());
        let mut candidates = 0;
        let mut logical: Vec<FpVector> = Vec::new();
        for tile in [face, face.transposed()] {
            for group in census_shift_groups() {
                let pats: Vec<PlanarPattern> = group.iter().map(|&(da, db)| tile.shifted(da, db)).collect();
                match build_pattern_product(&pats, params, dims) {
                    Ok(c) => {
                        candidates += 1;
                        if !c.is_empty() && is_logical(&c, &torus) {
                            logical.push(torus.vector_of(&c));
                        }
                    }
                    Err(Error::WrapSeam { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        let count = if logical.is_empty() {
            0
        } else {
            FpMatrix::from_row_vectors(params.modulus(), 2 * torus.qudits(), &logical)?.rank()
        };
        out.push(OrientationCensus {
            normal,
            in_plane_sides: (dims.side(a.index()), dims.side(b.index())),
            candidates,
            logical: logical.len(),
            count,
        });
    }
    Ok(out)
}

/// Dimension of the space of operators on the plane `normal = 0` commuting
/// with every generator, by a direct linear solve.
pub fn plane_logical_dimension(params: &CodeParams, dims: TorusDims, normal: Axis) -> Result<usize> {
    let torus = TorusCode::new(params, dims)?;
    let plane: Vec<Site> = dims.sites().filter(|s| s.coord(normal.index()) == 0).collect();
    let index: std::collections::HashMap<Site, usize> = plane.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let mut rows = Vec::new();
    for origin in dims.sites() {
        let mut row = vec![0i64; 2 * plane.len()];
        let mut touches = false;
        for (d, g) in torus.generator.vertices() {
            if let Some(&k) = index.get(&dims.wrap(origin.offset(d))) {
                let [g1, g2] = g.raw().map(i64::from);
                row[2 * k] -= g2;
                row[2 * k + 1] += g1;
                touches = true;
            }
        }
        if touches {
            rows.push(row);
        }
    }
    let m = FpMatrix::from_rows(params.modulus(), &rows)?;
    Ok(2 * plane.len() - m.rank())
}

/// Product of every generator on the torus.
pub fn product_of_all_generators(torus: &TorusCode) -> PauliConfig {
    let mut c = PauliConfig::on_torus(torus.params.modulus(), torus.dims);
    for origin in torus.dims.sites() {
        c = c.mul(&torus.generator_at(origin)).expect("same torus");
    }
    c
}

/// `n - rank` of the generator matrix.
pub fn encoded_qudit_count(torus: &TorusCode) -> usize {
    torus.qudits() - torus.matrix.rank()
}

/// Pairwise commutation exponents.
pub fn logical_commutation_table(configs: &[PauliConfig]) -> Result<FpMatrix> {
    let m = configs.first().map(|c| c.modulus()).ok_or_else(|| Error::DimensionMismatch("empty list".into()))?;
    let n = configs.len();
    let mut t = FpMatrix::zeros(m, n, n);
    for i in 0..n {
        for j in 0..n {
            t.set(i, j, crate::code::commutation_exponent(&configs[i], &configs[j])?.value() as i64);
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, Serialize)]
pub struct LogicalSummary {
    pub dims: [i64; 3],
    pub encoded_qudits: usize,
    pub generator_product_is_identity: bool,
    pub census: Vec<OrientationCensus>,
    /// Exponents between the independent planar operators found.
    pub commutation_table: Vec<Vec<u32>>,
}

/// Census, generator product, `k` and the commutation table for one torus.
pub fn logical_summary(params: &CodeParams, dims: TorusDims) -> Result<LogicalSummary> {
    let torus = TorusCode::new(params, dims)?;
    let census = planar_census(params, dims)?;
    let mut ops: Vec<PauliConfig> = Vec::new();
    let mut span: Vec<FpVector> = Vec::new();
    for normal in Axis::ALL {
        let face = PlanarPattern::face(normal, params.parity());
        for tile in [face, face.transposed()] {
            for group in census_shift_groups() {
                let pats: Vec<PlanarPattern> = group.iter().map(|&(da, db)| tile.shifted(da, db)).collect();
                let Ok(c) = build_pattern_product(&pats, params, dims) else { continue };
                if c.is_empty() || !is_logical(&c, &torus) {
                    continue;
                }
                let mut trial = span.clone();
                trial.push(torus.vector_of(&c));
                let cols = 2 * torus.qudits();
                if FpMatrix::from_row_vectors(params.modulus(), cols, &trial)?.rank() > span.len() {
                    span = trial;
                    ops.push(c);
                }
            }
        }
    }
    let table = if ops.is_empty() { Vec::new() } else { logical_commutation_table(&ops)?.to_rows() };
    Ok(LogicalSummary {
        dims: dims.sides(),
        encoded_qudits: encoded_qudit_count(&torus),
        generator_product_is_identity: product_of_all_generators(&torus).is_empty(),
        census,
        commutation_table: table,
    })
}
