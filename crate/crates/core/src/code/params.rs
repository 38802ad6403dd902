use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::SympPair;
use crate::error::{Error, Result};
use crate::fp::PrimeModulus;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    #[serde(rename = "S")]
    Symmetric,
    #[serde(rename = "A")]
    Antisymmetric,
}

impl Parity {
    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Symmetric => 1,
            Parity::Antisymmetric => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Parity::Symmetric => Parity::Antisymmetric,
            Parity::Antisymmetric => Parity::Symmetric,
        }
    }

    pub fn both() -> [Parity; 2] {
        [Parity::Symmetric, Parity::Antisymmetric]
    }
}

impl FromStr for Parity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" | "symmetric" => Ok(Parity::Symmetric),
            "A" | "a" | "antisymmetric" => Ok(Parity::Antisymmetric),
            other => Err(Error::Parse(format!("parity must be S or A, got {other:?}"))),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Symmetric => "S",
            Parity::Antisymmetric => "A",
        })
    }
}

/// Names of the four defining pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::Alpha, Label::Beta, Label::Gamma, Label::Delta];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Raw integer form of a tuple `(alpha, beta, gamma, delta)`.
pub type RawTuple = [[u32; 2]; 4];

/// A cubic code: prime modulus, four nonzero pairs and the inversion parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeParams {
    modulus: PrimeModulus,
    pairs: [SympPair; 4],
    parity: Parity,
}

impl CodeParams {
    pub fn new(modulus: PrimeModulus, pairs: [SympPair; 4], parity: Parity) -> Result<Self> {
        for (pair, label) in pairs.iter().zip(Label::ALL) {
            if pair.modulus() != modulus {
                return Err(Error::ModulusMismatch { left: modulus.get(), right: pair.modulus().get() });
            }
            if pair.is_zero() {
                return Err(Error::ZeroPair(label_name(label)));
            }
        }
        Ok(Self { modulus, pairs, parity })
    }

    pub fn from_ints(p: u32, pairs: [[i64; 2]; 4], parity: Parity) -> Result<Self> {
        let m = PrimeModulus::new(p)?;
        Self::new(m, pairs.map(|[x, z]| SympPair::new(m, x, z)), parity)
    }

    pub fn from_raw(modulus: PrimeModulus, raw: RawTuple, parity: Parity) -> Result<Self> {
        Self::new(modulus, raw.map(|[x, z]| SympPair::new(modulus, x as i64, z as i64)), parity)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn pairs(&self) -> [SympPair; 4] {
        self.pairs
    }

    pub fn pair(&self, label: Label) -> SympPair {
        self.pairs[label.index()]
    }

    pub fn alpha(&self) -> SympPair {
        self.pairs[0]
    }

    pub fn beta(&self) -> SympPair {
        self.pairs[1]
    }

    pub fn gamma(&self) -> SympPair {
        self.pairs[2]
    }

    pub fn delta(&self) -> SympPair {
        self.pairs[3]
    }

    pub fn raw(&self) -> RawTuple {
        self.pairs.map(SympPair::raw)
    }

    pub fn with_parity(&self, parity: Parity) -> Self {
        Self { parity, ..*self }
    }

    /// Parse a params document. JSON is tried first, then TOML.
    pub fn parse(text: &str) -> Result<Self> {
        let file: ParamsFile = match serde_json::from_str(text) {
            Ok(f) => f,
            Err(json_err) => toml::from_str(text)
                .map_err(|toml_err| Error::Parse(format!("not JSON ({json_err}) nor TOML ({toml_err})")))?,
        };
        file.try_into()
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_file(&self) -> ParamsFile {
        let c = self.pairs.map(|pair| pair.raw().map(i64::from));
        ParamsFile { p: self.modulus.get(), alpha: c[0], beta: c[1], gamma: c[2], delta: c[3], parity: self.parity }
    }
}

fn label_name(label: Label) -> &'static str {
    match label {
        Label::Alpha => "alpha",
        Label::Beta => "beta",
        Label::Gamma => "gamma",
        Label::Delta => "delta",
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.pairs;
        write!(f, "p={} {{{a},{b},{c},{d}}} {}", self.modulus, self.parity)
    }
}

/// On-disk parameter document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub p: u32,
    pub alpha: [i64; 2],
    pub beta: [i64; 2],
    pub gamma: [i64; 2],
    pub delta: [i64; 2],
    pub parity: Parity,
}

impl TryFrom<ParamsFile> for CodeParams {
    type Error = Error;
    fn try_from(f: ParamsFile) -> Result<Self> {
        CodeParams::from_ints(f.p, [f.alpha, f.beta, f.gamma, f.delta], f.parity)
    }
}

impl Serialize for CodeParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}
