//! Auslander–Reiten theory in the morphism category of a bound quiver algebra.

pub mod algebra;
pub mod ar;
pub mod ass;
pub mod decompose;
pub mod error;
pub mod io;
pub mod linalg;
pub mod module;
pub mod morph;
pub mod naming;
pub mod quiver;
pub mod sweep;
pub mod translation;

pub use algebra::{Algebra, AlgebraSpec, ArrowSpec, Path};
pub use error::{Error, Result};
pub use linalg::{Fp, Matrix, Vector};
pub use module::{Module, ModuleMap, ProjMap, ProjModule};
pub use ar::{Catalog, ShortExactSeq};
pub use translation::TranslationQuiver;
pub use morph::{MorphMap, MorphObject};
