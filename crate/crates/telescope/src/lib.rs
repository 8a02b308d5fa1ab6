//! Telescope complexes Tel_j(A;𝒂), the comparison maps w, u and tel, and
//! completion towers.

pub mod error;
pub mod tel;
pub mod tower;

pub use error::TelescopeError;
pub use tel::{
    dual_telescope, modified_power, tel_eval, tel_inclusion, tel_level_map, telescope, u_map, w_map,
    TelescopeComplex,
};
pub use tower::{completion_level, completion_tower, tel_on_module, CompletionTower, TelTower};
