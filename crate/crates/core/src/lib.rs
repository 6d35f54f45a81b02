pub mod automorphism;
pub mod context;
pub mod delta;
pub mod element;
pub mod error;
pub mod exec;
pub mod finite_m;
pub mod normal_form;
pub mod oracle;
pub mod presets;
pub mod shift;
pub mod text;
pub mod word;
