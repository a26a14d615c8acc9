//! Built-in fans.

use super::fan::Fan;
use crate::error::{Error, Result};

pub const LIBRARY: &[&str] = &[
    "P1",
    "P2",
    "P3",
    "P1xP1",
    "blowupP3_1pt",
    "blowupP3_2pts",
    "contractP3_2pts",
    "coneP1xP1_projective",
    "coneP1xP1_smallres",
];

fn e(v: &[i64]) -> Vec<i64> {
    v.to_vec()
}

fn p3_rays() -> Vec<Vec<i64>> {
    vec![e(&[1, 0, 0]), e(&[0, 1, 0]), e(&[0, 0, 1]), e(&[-1, -1, -1])]
}

/// Fan by name. Named divisors:
///
/// * `Pn`: `H` is a hyperplane class.
/// * `P1xP1`: `H1`, `H2` are the two rulings.
/// * `blowupP3_1pt`: `H` pulled back from `P3`, `E1` exceptional.
/// * `blowupP3_2pts`: `H`, `E1`, `E2`, blowing up the fixed points of the
///   cones `{0,1,2}` and `{0,1,3}`; the strict transform of the line through
///   them is the wall `{0,1}`.
/// * `contractP3_2pts`: the same rays with that line contracted, so the
///   cones `{0,1,4}` and `{0,1,5}` merge into a singular cone; divisor
///   names as for `blowupP3_2pts`, now as Weil divisors.
/// * `coneP1xP1_projective` and `coneP1xP1_smallres`: rays `u_b, u1..u4`;
///   `A` and `B` are the divisors of `u1` and `u2`, of classes `(1,0)` and
///   `(0,1)`, and `Hinf` is the divisor at infinity of class `(1,1)`. In the
///   small resolution the exceptional curve is the wall `{1,3}`.
pub fn library(name: &str) -> Result<Fan> {
    let fan = match name {
        "P1" => Fan::new(name, 1, vec![e(&[1]), e(&[-1])], vec![vec![0], vec![1]])?
            .with_divisor("H", vec![0, 1])?,
        "P2" => Fan::new(
            name,
            2,
            vec![e(&[1, 0]), e(&[0, 1]), e(&[-1, -1])],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )?
        .with_divisor("H", vec![0, 0, 1])?,
        "P3" => Fan::new(
            name,
            3,
            p3_rays(),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )?
        .with_divisor("H", vec![0, 0, 0, 1])?,
        "P1xP1" => Fan::new(
            name,
            2,
            vec![e(&[1, 0]), e(&[0, 1]), e(&[-1, 0]), e(&[0, -1])],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )?
        .with_divisor("H1", vec![1, 0, 0, 0])?
        .with_divisor("H2", vec![0, 1, 0, 0])?,
        "blowupP3_1pt" => {
            let mut rays = p3_rays();
            rays.push(e(&[1, 1, 1]));
            Fan::new(
                name,
                3,
                rays,
                vec![vec![0, 1, 4], vec![0, 2, 4], vec![1, 2, 4], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
            )?
            .with_divisor("H", vec![0, 0, 0, 1, 0])?
            .with_divisor("E1", vec![0, 0, 0, 0, 1])?
        }
        "blowupP3_2pts" | "contractP3_2pts" => {
            let mut rays = p3_rays();
            rays.push(e(&[1, 1, 1]));
            rays.push(e(&[0, 0, -1]));
            let mut cones = vec![
                vec![0, 2, 4],
                vec![1, 2, 4],
                vec![0, 3, 5],
                vec![1, 3, 5],
                vec![0, 2, 3],
                vec![1, 2, 3],
            ];
            if name == "blowupP3_2pts" {
                cones.push(vec![0, 1, 4]);
                cones.push(vec![0, 1, 5]);
            } else {
                cones.push(vec![0, 1, 4, 5]);
            }
            Fan::new(name, 3, rays, cones)?
            .with_divisor("H", vec![0, 0, 1, 0, 1, 0])?
            .with_divisor("E1", vec![0, 0, 0, 0, 1, 0])?
            .with_divisor("E2", vec![0, 0, 0, 0, 0, 1])?
        }
        "coneP1xP1_projective" | "coneP1xP1_smallres" => {
            let rays = vec![e(&[0, 0, 1]), e(&[1, 0, 0]), e(&[0, 1, 0]), e(&[-1, 0, -1]), e(&[0, -1, -1])];
            let mut cones = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 1, 4]];
            if name == "coneP1xP1_projective" {
                cones.push(vec![1, 2, 3, 4]);
            } else {
                cones.push(vec![1, 2, 3]);
                cones.push(vec![1, 3, 4]);
            }
            Fan::new(name, 3, rays, cones)?
                .with_divisor("A", vec![0, 1, 0, 0, 0])?
                .with_divisor("B", vec![0, 0, 1, 0, 0])?
                .with_divisor("Hinf", vec![1, 0, 0, 0, 0])?
        }
        _ => {
            return Err(Error::Fan(format!(
                "unknown fan `{name}`; available: {}",
                LIBRARY.join(", ")
            )))
        }
    };
    Ok(fan)
}

/// A library name or a `fan rank=... rays=... cones=...` description.
pub fn load_fan(spec: &str) -> Result<Fan> {
    if spec.trim_start().starts_with("fan") {
        Fan::parse(spec)
    } else {
        library(spec.trim())
    }
}
