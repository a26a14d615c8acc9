pub mod gb;
pub mod hom;
pub mod matrix;
pub mod module;
pub mod resolution;
pub mod ring;
pub mod syzygy;
pub mod vector;
pub mod yoneda;

pub use gb::{groebner, is_member, normal_form};
pub use hom::{
    ext1_cocycles, ext_dims, ext_dims_from, ext_vanishes, fiber_generators, higher_ext_dims, hom_space, is_mcm, stable_hom, ExtTable,
    Grading, McmReport, MorphismSpace,
};
pub use matrix::Matrix;
pub use module::FPModule;
pub use resolution::{resolve, FreeResolution};
pub use ring::QuotientRing;
pub use syzygy::{preimage, syzygies};
pub use vector::{VTerm, Vector};
pub use yoneda::{universal_extension, yoneda_extension, Extension};
