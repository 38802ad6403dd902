use std::fmt;

use serde::Serialize;

use crate::code::{Axis, Site};
use crate::error::{Error, Result};

/// A plane spanned by a length axis and a width axis; the remaining axis is the normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlaneOrientation {
    pub length: Axis,
    pub width: Axis,
}

impl PlaneOrientation {
    pub fn new(length: Axis, width: Axis) -> Result<Self> {
        if length == width {
            return Err(Error::DegenerateGeometry("length and width share an axis".into()));
        }
        Ok(Self { length, width })
    }

    pub fn normal(self) -> Axis {
        Axis::third(self.length, self.width)
    }

    /// All six ordered choices.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(6);
        for length in Axis::ALL {
            for width in Axis::ALL {
                if length != width {
                    out.push(Self { length, width });
                }
            }
        }
        out
    }

    pub fn along(length: Axis) -> Vec<Self> {
        Self::all().into_iter().filter(|o| o.length == length).collect()
    }

    /// Lattice site with frame coordinates `(t, u, v)` along length, width, normal.
    pub fn site(self, t: i64, u: i64, v: i64) -> Site {
        let mut c = [0i64; 3];
        c[self.length.index()] = t;
        c[self.width.index()] = u;
        c[self.normal().index()] = v;
        Site(c)
    }

    /// Inverse of [`Self::site`].
    pub fn frame(self, s: Site) -> (i64, i64, i64) {
        (s.coord(self.length.index()), s.coord(self.width.index()), s.coord(self.normal().index()))
    }
}

impl Default for PlaneOrientation {
    fn default() -> Self {
        Self { length: Axis::X, width: Axis::Y }
    }
}

impl fmt::Display for PlaneOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l{}w{}", self.length.name(), self.width.name())
    }
}

/// Cross-section shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SegmentKind {
    Flat,
    /// `corner` sites run along the width axis, the rest turn along the
    /// normal in direction `bend` (`+1` or `-1`).
    Cornered {
        corner: usize,
        bend: i64,
    },
}

/// Which family of cross-sections a scan covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KindFamily {
    Flat,
    Cornered,
}

impl KindFamily {
    pub fn variants(self, width: usize) -> Vec<SegmentKind> {
        match self {
            KindFamily::Flat => vec![SegmentKind::Flat],
            KindFamily::Cornered => {
                (1..width).flat_map(|corner| [1, -1].map(|bend| SegmentKind::Cornered { corner, bend })).collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SegmentGeometry {
    pub kind: SegmentKind,
    pub width: usize,
    pub length: usize,
    pub orientation: PlaneOrientation,
}

impl SegmentGeometry {
    pub fn new(kind: SegmentKind, width: usize, length: usize, orientation: PlaneOrientation) -> Result<Self> {
        if width == 0 {
            return Err(Error::DegenerateGeometry("empty cross-section".into()));
        }
        if length < 2 {
            return Err(Error::DegenerateGeometry(format!("length {length} leaves no interior generator")));
        }
        if let SegmentKind::Cornered { corner, bend } = kind {
            if corner == 0 || corner >= width {
                return Err(Error::DegenerateGeometry(format!("corner {corner} outside 1..{width}")));
            }
            if bend.abs() != 1 {
                return Err(Error::DegenerateGeometry(format!("bend {bend} is not +-1")));
            }
        }
        Ok(Self { kind, width, length, orientation })
    }

    pub fn flat(width: usize, length: usize) -> Result<Self> {
        Self::new(SegmentKind::Flat, width, length, PlaneOrientation::default())
    }

    /// Transverse `(u, v)` coordinates of the cross-section, in order.
    pub fn cross_section(&self) -> Vec<(i64, i64)> {
        match self.kind {
            SegmentKind::Flat => (0..self.width as i64).map(|i| (i, 0)).collect(),
            SegmentKind::Cornered { corner, bend } => {
                let c = corner as i64;
                let mut out: Vec<(i64, i64)> = (0..c).map(|i| (i, 0)).collect();
                out.extend((1..=(self.width - corner) as i64).map(|k| (c - 1, bend * k)));
                out
            }
        }
    }

    /// Support sites ordered column by column (`t` major, cross-section minor).
    pub fn support(&self) -> Vec<Site> {
        let cross = self.cross_section();
        (0..self.length as i64).flat_map(|t| cross.iter().map(move |&(u, v)| self.orientation.site(t, u, v))).collect()
    }

    /// Cross-section copies just before the first and just after the last column.
    pub fn anchors(&self) -> (Vec<Site>, Vec<Site>) {
        let cross = self.cross_section();
        let col = |t: i64| cross.iter().map(|&(u, v)| self.orientation.site(t, u, v)).collect();
        (col(-1), col(self.length as i64))
    }
}
