//! Float rasterization of two-dimensional slices of the orbit space.

use std::fmt::Write as _;

use rayon::prelude::*;

use super::{OrbitSpace, FLOAT_TOLERANCE};
use crate::error::{Error, Result};
use crate::mpoly::{classify_float, PointClass};

pub const MAX_RESOLUTION: usize = 4000;

#[derive(Clone, Debug, PartialEq)]
pub struct RasterSpec {
    /// `[xmin, xmax, ymin, ymax]`.
    pub window: [f64; 4],
    /// Number of cells along each axis.
    pub resolution: usize,
    /// Coordinates plotted on the horizontal and vertical axes.
    pub axes: (usize, usize),
    /// Values of the remaining coordinates (entries at `axes` are ignored).
    pub fixed: Vec<f64>,
    pub tolerance: f64,
}

impl RasterSpec {
    pub fn square(half_width: f64, resolution: usize, rank: usize) -> Self {
        RasterSpec {
            window: [-half_width, half_width, -half_width, half_width],
            resolution,
            axes: (0, 1),
            fixed: vec![0.0; rank],
            tolerance: FLOAT_TOLERANCE,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RasterCell {
    pub col: usize,
    pub row: usize,
    /// Cell center.
    pub x: f64,
    pub y: f64,
    /// Some sample of the cell satisfies `H ⪰ 0`.
    pub psd: bool,
    /// Numerical rank of `H` at the center.
    pub rank: usize,
    pub class: PointClass,
}

#[derive(Clone, Debug)]
pub struct Raster {
    pub spec: RasterSpec,
    /// Row-major from the bottom row (`ymin`) upwards.
    pub cells: Vec<RasterCell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvgColors {
    pub inside: String,
    pub boundary: String,
    pub background: String,
}

impl Default for SvgColors {
    fn default() -> Self {
        SvgColors { inside: "#b0b0b0".into(), boundary: "#303030".into(), background: "#ffffff".into() }
    }
}

/// Classifies every cell from its four corners and its center: interior or
/// outside when all five samples agree, boundary otherwise.
pub fn region_raster(space: &OrbitSpace, spec: &RasterSpec) -> Result<Raster> {
    let [x0, x1, y0, y1] = spec.window;
    let n = spec.resolution;
    let rank = space.rank();
    if !(x0 < x1 && y0 < y1) || !spec.window.iter().all(|v| v.is_finite()) || n == 0 {
        return Err(Error::DegenerateWindow);
    }
    if n > MAX_RESOLUTION {
        return Err(Error::Invalid(format!("resolution {n} exceeds {MAX_RESOLUTION}")));
    }
    let (ax, ay) = spec.axes;
    if ax >= rank || ay >= rank || ax == ay || spec.fixed.len() != rank {
        return Err(Error::Invalid("raster axes must be two distinct coordinates of the point".into()));
    }
    let gx = |i: usize| x0 + i as f64 * (x1 - x0) / n as f64;
    let gy = |j: usize| y0 + j as f64 * (y1 - y0) / n as f64;
    let sample = |x: f64, y: f64| -> Result<(PointClass, usize)> {
        let mut z = spec.fixed.clone();
        z[ax] = x;
        z[ay] = y;
        Ok(classify_float(&space.hermite_coeffs_f64(&z)?, spec.tolerance))
    };
    // Corner verdicts are shared by neighbouring cells.
    let corners: Vec<Vec<PointClass>> = (0..=n)
        .into_par_iter()
        .map(|j| (0..=n).map(|i| sample(gx(i), gy(j)).map(|s| s.0)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let cells: Vec<RasterCell> = (0..n)
        .into_par_iter()
        .map(|row| {
            (0..n)
                .map(|col| {
                    let (x, y) = ((gx(col) + gx(col + 1)) / 2.0, (gy(row) + gy(row + 1)) / 2.0);
                    let (center, rank) = sample(x, y)?;
                    let all = [
                        center,
                        corners[row][col],
                        corners[row][col + 1],
                        corners[row + 1][col],
                        corners[row + 1][col + 1],
                    ];
                    let class = if all.iter().all(|c| *c == PointClass::Interior) {
                        PointClass::Interior
                    } else if all.iter().all(|c| *c == PointClass::Outside) {
                        PointClass::Outside
                    } else {
                        PointClass::Boundary
                    };
                    let psd = all.iter().any(|c| *c != PointClass::Outside);
                    Ok(RasterCell { col, row, x, y, psd, rank, class })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut raster = Raster { spec: spec.clone(), cells };
    if rank == 2 {
        raster.mark_images(space)?;
    }
    Ok(raster)
}

impl Raster {
    /// Upgrades outside cells hit by `θ(x)` for `x` on an angle grid to
    /// boundary. The grid step divides 1/6, so it contains the alcove vertices;
    /// this catches cusps thinner than the sample spacing.
    fn mark_images(&mut self, space: &OrbitSpace) -> Result<()> {
        let n = self.spec.resolution;
        let steps = 6 * n.div_ceil(3).max(10);
        let [x0, x1, y0, y1] = self.spec.window;
        let (ax, ay) = self.spec.axes;
        let hits: Vec<usize> = (0..steps)
            .into_par_iter()
            .map(|a| {
                let mut out = Vec::new();
                for b in 0..steps {
                    let z = space.theta_from_angles(&[a as f64 / steps as f64, b as f64 / steps as f64])?;
                    let fx = (z[ax] - x0) / (x1 - x0) * n as f64;
                    let fy = (z[ay] - y0) / (y1 - y0) * n as f64;
                    if fx >= 0.0 && fy >= 0.0 && fx <= n as f64 && fy <= n as f64 {
                        out.push(fy.floor().min(n as f64 - 1.0) as usize * n + fx.floor().min(n as f64 - 1.0) as usize);
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        for i in hits {
            let c = &mut self.cells[i];
            if c.class == PointClass::Outside {
                c.class = PointClass::Boundary;
                c.psd = true;
            }
        }
        Ok(())
    }
}

impl Raster {
    pub fn cell_containing(&self, x: f64, y: f64) -> Option<&RasterCell> {
        let [x0, x1, y0, y1] = self.spec.window;
        let n = self.spec.resolution;
        if x < x0 || x > x1 || y < y0 || y > y1 {
            return None;
        }
        let col = (((x - x0) / (x1 - x0) * n as f64) as usize).min(n - 1);
        let row = (((y - y0) / (y1 - y0) * n as f64) as usize).min(n - 1);
        self.cells.get(row * n + col)
    }

    /// Every cell having `(x, y)` on its closure.
    pub fn cells_touching(&self, x: f64, y: f64) -> Vec<&RasterCell> {
        let [x0, x1, y0, y1] = self.spec.window;
        let n = self.spec.resolution;
        let hx = (x1 - x0) / n as f64 / 2.0 * (1.0 + 1e-9);
        let hy = (y1 - y0) / n as f64 / 2.0 * (1.0 + 1e-9);
        self.cells.iter().filter(|c| (c.x - x).abs() <= hx && (c.y - y).abs() <= hy).collect()
    }

    /// CSV with columns `z<a>,z<b>,psd,rank` at cell centers.
    pub fn to_csv(&self) -> String {
        let (ax, ay) = self.spec.axes;
        let mut out = format!("z{},z{},psd,rank\n", ax + 1, ay + 1);
        for c in &self.cells {
            let _ = writeln!(out, "{},{},{},{}", c.x, c.y, c.psd, c.rank);
        }
        out
    }

    /// One rectangle per interior or boundary cell, with `y` pointing up.
    pub fn to_svg(&self, colors: &SvgColors) -> String {
        let n = self.spec.resolution;
        let px = 600.0 / n as f64;
        let size = px * n as f64;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
        );
        let _ = writeln!(out, r#"<rect x="0" y="0" width="{size}" height="{size}" fill="{}"/>"#, colors.background);
        for c in &self.cells {
            let fill = match c.class {
                PointClass::Interior => &colors.inside,
                PointClass::Boundary => &colors.boundary,
                PointClass::Outside => continue,
            };
            let x = c.col as f64 * px;
            let y = (n - 1 - c.row) as f64 * px;
            let _ = writeln!(out, r#"<rect x="{x}" y="{y}" width="{px}" height="{px}" fill="{fill}"/>"#);
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{Family, RootSystemType};

    fn space(f: Family) -> OrbitSpace {
        OrbitSpace::new(RootSystemType::new(f, 2).unwrap()).unwrap()
    }

    #[test]
    fn c2_window() {
        let s = space(Family::C);
        let r = region_raster(&s, &RasterSpec::square(1.1, 50, 2)).unwrap();
        assert_eq!(r.cells.len(), 2500);
        assert!(r.cells_touching(0.0, 0.0).iter().all(|c| c.psd));
        assert_eq!(r.cell_containing(1.0, -1.0).unwrap().class, PointClass::Outside);
        assert_eq!(r.cell_containing(-1.09, -1.09).unwrap().class, PointClass::Outside);
        assert!(r.to_csv().starts_with("z1,z2,psd,rank\n"));
        assert!(r.to_svg(&SvgColors::default()).contains("<rect"));
    }

    #[test]
    fn c2_vertices_at_resolution_200() {
        let s = space(Family::C);
        let r = region_raster(&s, &RasterSpec::square(1.0, 200, 2)).unwrap();
        for (x, y) in [(1.0, 1.0), (-1.0, 1.0), (0.0, -1.0)] {
            assert!(r.cells_touching(x, y).iter().any(|c| c.psd), "({x},{y})");
        }
        // Vertices strictly inside cells, where the cusp at (±1, 1) is far
        // thinner than the sample spacing.
        let r = region_raster(&s, &RasterSpec::square(1.1, 200, 2)).unwrap();
        for (x, y) in [(1.0, 1.0), (-1.0, 1.0), (0.0, -1.0)] {
            assert!(r.cell_containing(x, y).unwrap().psd, "({x},{y})");
        }
    }

    #[test]
    fn a2_vertices_marked() {
        let s = space(Family::A);
        let r = region_raster(&s, &RasterSpec::square(1.1, 120, 2)).unwrap();
        let h = 3f64.sqrt() / 2.0;
        for (x, y) in [(1.0, 0.0), (-0.5, h), (-0.5, -h)] {
            assert!(r.cells_touching(x, y).iter().any(|c| c.psd), "({x},{y})");
        }
    }

    #[test]
    fn b2_symmetric_in_last_coordinate() {
        let s = space(Family::B);
        let r = region_raster(&s, &RasterSpec::square(1.2, 40, 2)).unwrap();
        let n = 40;
        for c in &r.cells {
            let mirror = &r.cells[(n - 1 - c.row) * n + c.col];
            assert_eq!(c.class, mirror.class);
        }
    }

    #[test]
    fn degenerate_windows() {
        let s = space(Family::C);
        let mut spec = RasterSpec::square(1.0, 10, 2);
        spec.window = [1.0, 1.0, 0.0, 1.0];
        assert!(matches!(region_raster(&s, &spec), Err(Error::DegenerateWindow)));
        spec = RasterSpec::square(1.0, 0, 2);
        assert!(region_raster(&s, &spec).is_err());
    }
}
