//! Builders for the concrete families and the two extension procedures.

mod extensions;
mod families;
mod free;

pub use extensions::{
    double_extension, double_extension_by_derivation, linear_lie_algebra, tstar_extension,
    Cocycle2, Representation,
};
pub use families::{
    a_sl2, abelian_quadratic, block_rotation, generalized_oscillator, heisenberg,
    n23_inner_block, n23_inner_generators, n23_levi_block, n23_levi_generators, n23s,
    n32_inner_block, n32_inner_generators, n32_levi_algebra, n32_levi_block, n32_levi_generators,
    n32s, oscillator_d4, sl2, sl2_killing, sl2_module, sl2_module_form, split_h3_extension,
    tensor_truncated,
};
pub use free::{free_nilpotent, hall_words, mobius, n23_quadratic, n32_quadratic, witt_dim};
