//! Strictification and non-strictification of monoidal categories, with
//! exhaustive law checking on finite models.

pub mod axioms;
pub mod category;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod laws;
pub mod models;
pub mod nonstrictify;
pub mod report;
pub mod strictify;
pub mod terms;
pub mod trace;

pub use category::{MonoidalCategory, Mor, Obj};
pub use error::{CatError, Result};
pub use functor::{MonoidalFunctor, MonoidalNat, Strength};
pub use terms::{Generator, MagmaTerm, Shape, Word};
