mod componentwise;
mod defect;
mod injective;
mod koszul;

pub use componentwise::{component_submodule, is_componentwise_linear, ComponentVerdict, CwLinearReport, CwStatus};
pub use defect::{linear_part, linearity_defect, linearity_defect_of_complex, LdResult, LdStatus};
pub use injective::{injective_linearity_defect, is_gorenstein};
pub use koszul::{base_change, is_koszul_algebra, koszul_depth, KoszulStatus};
