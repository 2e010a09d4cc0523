//! Geometric objects and the coordinate laws of linear, polylinear and
//! skew-symmetric maps under a passive change of basis.

mod object;
mod skew;
mod tensor;

pub use object::{
    endo_transform, geo_transform, rep_action_law_check, same_orbit, GeometricObject, GroupRep,
};
pub use skew::{
    detstar, skew_apply, skew_apply_detstar, skew_covariance_at, skew_transform_check, DetStar,
};
pub use tensor::{
    apply_linear_tensor, apply_polylinear, covariance_check_linear, covariance_check_polylinear,
    covariance_check_polylinear_from, maps_equal, transform_linear_tensor, transform_polylinear,
    TensorPolyMap, Term,
};
