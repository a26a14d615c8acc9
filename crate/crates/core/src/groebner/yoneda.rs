//! Extensions `0 -> A -> E -> B -> 0` built from `Ext^1(B, A)` cocycles.

use super::gb::{groebner, normal_form};
use super::hom::{matrix_to_vector, total_ext1_coboundaries};
use super::matrix::Matrix;
use super::module::FPModule;
use super::syzygy::preimage;
use super::vector::Vector;
use crate::error::{Error, Result};

/// An extension module with its structure maps.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: FPModule,
    /// The submodule; a direct sum of copies of `A` for universal extensions.
    pub sub: FPModule,
    pub quotient: FPModule,
    /// `g_E x g_sub`.
    pub inclusion: Matrix,
    /// `g_B x g_E`.
    pub projection: Matrix,
}

/// The extension of `quotient` by `sub` classified by the cocycle `class`,
/// a `g_sub x r` matrix where `r` counts the relations of `quotient`.
///
/// Generators of the result are those of `quotient` followed by those of
/// `sub`. With `nontrivial` set, a cocycle that is a coboundary is an error.
pub fn yoneda_extension(class: &Matrix, sub: &FPModule, quotient: &FPModule, nontrivial: bool) -> Result<Extension> {
    if nontrivial {
        let j = total_ext1_coboundaries(quotient, sub);
        let v = matrix_to_vector(class);
        if normal_form(&v, &j, sub.ring.order()).is_zero() {
            return Err(Error::Invalid("extension class is zero in Ext^1".into()));
        }
    }
    build(class, sub, quotient)
}

/// The universal extension `0 -> A^n -> E -> B -> 0` for a basis of `n`
/// classes of `Ext^1(B, A)`.
pub fn universal_extension(classes: &[Matrix], sub: &FPModule, quotient: &FPModule) -> Result<Extension> {
    let mut sum = if classes.is_empty() {
        FPModule::free(&sub.ring, 0)
    } else {
        sub.clone()
    };
    for _ in 1..classes.len() {
        sum = sum.direct_sum(sub)?;
    }
    let stacked = if classes.is_empty() {
        Matrix::zero(&sub.ring.poly, 0, quotient.rels.ncols())
    } else {
        let rows: Vec<Vec<&Matrix>> = classes.iter().map(|c| vec![c]).collect();
        Matrix::blocks(&rows)?
    };
    build(&stacked, &sum, quotient)
}

fn build(class: &Matrix, sub: &FPModule, quotient: &FPModule) -> Result<Extension> {
    let ring = &sub.ring;
    let (ga, gb) = (sub.ngens, quotient.ngens);
    let r = quotient.rels.ncols();
    if class.nrows != ga || class.ncols() != r {
        return Err(Error::SizeMismatch(format!(
            "extension class must be {ga} x {r}, got {} x {}",
            class.nrows,
            class.ncols()
        )));
    }
    let poly = &ring.poly;
    let zero_top = Matrix::zero(poly, gb, sub.rels.ncols());
    let rels = Matrix::blocks(&[vec![&quotient.rels, &zero_top], vec![&class.neg(), &sub.rels]])?;
    let mut module = FPModule::new(ring, ga + gb, rels)?;
    if let (Some(db), Some(da)) = (&quotient.degrees, &sub.degrees) {
        let degs: Vec<i64> = db.iter().chain(da).copied().collect();
        if let Ok(graded) = module.clone().with_degrees(degs) {
            module = graded;
        }
    }
    let names: Vec<String> = quotient.names.iter().chain(&sub.names).cloned().collect();
    module = module.with_names(names);
    let inclusion = Matrix::blocks(&[vec![&Matrix::zero(poly, gb, ga)], vec![&Matrix::identity(poly, ga)]])?;
    let projection = Matrix::blocks(&[vec![&Matrix::identity(poly, gb), &Matrix::zero(poly, gb, ga)]])?;
    Ok(Extension {
        module,
        sub: sub.clone(),
        quotient: quotient.clone(),
        inclusion,
        projection,
    })
}

impl Extension {
    /// Checks that both maps are module maps, the inclusion is injective
    /// and the kernel of the projection equals the image of the inclusion.
    /// The projection is surjective by construction.
    pub fn is_exact(&self) -> bool {
        let order = self.module.ring.order();
        let maps_ok = |x: &Matrix, src: &FPModule, tgt: &FPModule| {
            x.mul(&src.rels)
                .map(|p| p.cols.iter().all(|c| tgt.is_zero_element(c)))
                .unwrap_or(false)
        };
        if !maps_ok(&self.inclusion, &self.sub, &self.module)
            || !maps_ok(&self.projection, &self.module, &self.quotient)
        {
            return false;
        }
        // injectivity: inclusion^{-1}(U_E) lies in U_A
        let back = preimage(&self.inclusion, self.module.gb());
        if !back.iter().all(|v| self.sub.is_zero_element(v)) {
            return false;
        }
        // ker(projection) = im(inclusion) modulo U_E
        let ker = preimage(&self.projection, self.quotient.gb());
        let mut image: Vec<Vector> = self.inclusion.cols.clone();
        image.extend(self.module.gb().iter().cloned());
        let image_gb = groebner(&image, order);
        let ker_in_image = ker.iter().all(|v| normal_form(v, &image_gb, order).is_zero());
        let image_in_ker = self
            .inclusion
            .cols
            .iter()
            .all(|c| self.quotient.is_zero_element(&self.projection.apply(c)));
        ker_in_image && image_in_ker
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::hom::{ext1_cocycles, ext_dims, Grading};
    use crate::groebner::ring::QuotientRing;

    #[test]
    fn zero_class_splits() {
        let a = QuotientRing::parse("Q[z]/(z^2)").unwrap();
        let k = FPModule::parse("A/(z)", Some(&a)).unwrap();
        let zero = Matrix::zero(&a.poly, 1, 1);
        assert!(yoneda_extension(&zero, &k, &k, true).is_err());
        let e = yoneda_extension(&zero, &k, &k, false).unwrap();
        assert!(e.is_exact());
        assert_eq!(e.module, k.direct_sum(&k).unwrap());
    }

    #[test]
    fn nonsplit_extension_of_residue_field() {
        let a = QuotientRing::parse("Q[z]/(z^2)").unwrap();
        let k = FPModule::parse("A/(z)", Some(&a)).unwrap();
        let cls = ext1_cocycles(&k, &k, Grading::Total).unwrap();
        assert_eq!(cls.len(), 1);
        let e = yoneda_extension(&cls[0], &k, &k, true).unwrap();
        assert!(e.is_exact());
        // the middle term is A itself: no higher Ext into k
        assert_eq!(ext_dims(&e.module, &k, 2, Grading::Total).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn cone_extension_is_exact_and_rank_two() {
        let t = QuotientRing::parse("Q[x,y,z,w,v]/(x*y+z*w)").unwrap();
        let i1 = FPModule::parse("ideal (x, z)", Some(&t)).unwrap();
        let i2 = FPModule::parse("ideal (x, w)", Some(&t)).unwrap();
        let cls = ext1_cocycles(&i2, &i1, Grading::Degree(0)).unwrap();
        assert_eq!(cls.len(), 1);
        let g1 = yoneda_extension(&cls[0], &i1, &i2, true).unwrap();
        assert!(g1.is_exact());
        assert_eq!(g1.module.ngens, 4);
        assert_eq!(g1.module.degrees, Some(vec![1, 1, 1, 1]));
        let u = universal_extension(&cls, &i1, &i2).unwrap();
        assert_eq!(u.module, g1.module);
    }
}
