//! Toric varieties from fans: cohomology of invariant divisors, class
//! groups, Cartier tests and intersection numbers with invariant curves.

pub mod classgroup;
pub mod cohomology;
pub mod fan;
pub mod library;

pub use classgroup::{intersect_curve, smith_normal_form, weil_is_cartier, ClassGroup};
pub use cohomology::{cohomology, cohomology_by_degree, euler_characteristic, reduced_betti};
pub use fan::{Fan, TDivisor, Wall};
pub use library::{library, load_fan, LIBRARY};

#[cfg(test)]
mod tests {
    use super::*;

    fn h(fan: &Fan, d: &str) -> Vec<usize> {
        cohomology(fan, &fan.divisor(d).unwrap()).unwrap()
    }

    #[test]
    fn library_fans_are_complete() {
        for name in LIBRARY {
            let f = library(name).unwrap();
            assert!(f.is_complete(), "{name}");
            let singular = ["coneP1xP1_projective", "contractP3_2pts"];
            assert_eq!(f.is_smooth(), !singular.contains(name), "{name}");
        }
    }

    #[test]
    fn projective_plane_and_space() {
        let p2 = library("P2").unwrap();
        assert_eq!(h(&p2, "-3H"), vec![0, 0, 1]);
        assert_eq!(h(&p2, "[-1,-1,-1]"), vec![0, 0, 1]);
        assert_eq!(h(&p2, "2H"), vec![6, 0, 0]);
        assert_eq!(h(&p2, "-H"), vec![0, 0, 0]);
        let p3 = library("P3").unwrap();
        assert_eq!(h(&p3, "H"), vec![4, 0, 0, 0]);
        assert_eq!(h(&p3, "-4H"), vec![0, 0, 0, 1]);
        assert_eq!(ClassGroup::of(&p3).to_string(), "Z");
    }

    #[test]
    fn product_of_lines() {
        let f = library("P1xP1").unwrap();
        assert_eq!(h(&f, "-2H1"), vec![0, 1, 0]);
        assert_eq!(h(&f, "2H1-2H2"), vec![0, 3, 0]);
        assert_eq!(h(&f, "-2H1-2H2"), vec![0, 0, 1]);
    }

    #[test]
    fn blowup_of_two_points() {
        let y = library("blowupP3_2pts").unwrap();
        assert_eq!(h(&y, "H"), vec![4, 0, 0, 0]);
        assert_eq!(h(&y, "H-E1"), vec![3, 0, 0, 0]);
        assert_eq!(h(&y, "-H+2E1+E2"), vec![0, 0, 0, 0]);
        assert_eq!(h(&y, "H-2E1-E2"), vec![0, 1, 0, 0]);
        assert_eq!(h(&y, "-4H+3E1+2E2"), vec![0, 0, 0, 0]);
        let cl = ClassGroup::of(&y);
        assert_eq!(cl.free_rank, 3);
        assert!(cl.linearly_equivalent(&y.canonical(), &y.divisor("-4H+2E1+2E2").unwrap()));
        let l = y.wall(&[0, 1]).unwrap();
        assert_eq!(intersect_curve(&y, &y.divisor("-H+E1+E2").unwrap(), &l).unwrap(), 1);
        assert_eq!(intersect_curve(&y, &y.divisor("-E1").unwrap(), &l).unwrap(), -1);
        assert_eq!(intersect_curve(&y, &y.divisor("H").unwrap(), &l).unwrap(), 1);
    }

    #[test]
    fn cone_over_quadric() {
        let x = library("coneP1xP1_projective").unwrap();
        for (a, b) in [(1, 1), (2, 2), (-1, -1), (1, 0), (0, 1), (2, -1)] {
            let d = x.ray_divisor(1).scale(a).add(&x.ray_divisor(2).scale(b));
            assert_eq!(weil_is_cartier(&x, &d), a == b, "({a},{b})");
        }
        let cl = ClassGroup::of(&x);
        assert!(cl.linearly_equivalent(&x.divisor("Hinf").unwrap(), &x.divisor("A+B").unwrap()));
        let s = library("coneP1xP1_smallres").unwrap();
        let c = s.wall(&[1, 3]).unwrap();
        assert_eq!(intersect_curve(&s, &s.divisor("B").unwrap(), &c).unwrap(), 1);
        assert_eq!(intersect_curve(&s, &s.divisor("A").unwrap(), &c).unwrap(), -1);
        // the facet {u1,u2} of the singular cone carries no wall relation
        assert!(x.wall(&[1, 2]).is_err());
    }
}
