//! Rational rigid-body motions with prescribed line trajectories.
//!
//! A rational ruled surface is given as a *line polynomial* `L = L_p + ε L_d`,
//! a vectorial dual-quaternion polynomial satisfying the Plücker condition.
//! This crate decides whether a rational motion `C = P + ε D` moving the line
//! `k` of the moving frame along `L` exists, constructs one of minimal degree
//! with closed formulas for the translational part, factors motion
//! polynomials into linear (revolute) factors and synthesizes the degree-two
//! coupler motion of a Bennett linkage through three prescribed lines.
//!
//! The crate is `no_std` and only needs `alloc`. All existence and synthesis
//! pipelines run in exact rational arithmetic ([`Rational`]); the three-line
//! interpolation runs in binary64.
//!
//! ```
//! use ruled_motion::{LinePoly, QuatPoly, Poly, Rational, SynthesisOptions, synthesize};
//!
//! // A fixed line: the motion is the identity.
//! let line = LinePoly::<Rational>::new(QuatPoly::k(), QuatPoly::zero()).unwrap();
//! let res = synthesize(&line, &SynthesisOptions::default()).unwrap();
//! assert!(res.h.is_one());
//! assert_eq!(res.motion.primal().degree(), Poly::<Rational>::one().degree());
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dual;
pub mod error;
pub mod factor;
pub mod interp;
pub mod line;
pub mod linalg;
pub mod motion;
pub mod poly;
pub mod primal;
pub mod quat;
pub mod quatpoly;
pub mod roots;
pub mod scalar;

pub use dual::{
    dual_part_raw, minimality_check, reduce_degree, solution_family, synthesize, verify_solution,
    DegreeReduction, DualTrace, MinimalityReport, SynthesisOptions, SynthesisResult, Verification,
};
pub use error::{Error, Result};
pub use factor::{
    act_on_point, extract_right_factor_quadratic, factor_into_linear, norm_quadratics,
    peel_translation_factor, Factorization, LinearFactor,
};
pub use interp::{
    interpolate_three_lines, lagrange_basis, preimage_half_turn, BennettResult, InterpolationOptions,
    InterpolationResiduals,
};
pub use line::{
    act_on_line, is_kinematic, is_reduced, reduce, saturation_analysis, validate_line_poly,
    LinePoly, PluckerLine, SaturationReport,
};
pub use motion::{DualQuatPoly, MotionPoly};
pub use poly::{Bound, Degree, Poly};
pub use primal::{build_primal_part, rotate_problem, solve_primal, PrimalPart, PrimalSolution, RotationSchedule};
pub use quat::{DualQuat, Quat};
pub use quatpoly::QuatPoly;
pub use scalar::{parse_rational, Rational, Scalar, Tolerance};
