/// Named constants used by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsTable {
    pub euler_gamma: f64,
    pub catalan: f64,
    pub glaisher: f64,
    pub pi: f64,
}

pub const CONSTANTS: ConstantsTable = ConstantsTable {
    euler_gamma: 0.577_215_664_901_532_860_6,
    catalan: 0.915_965_594_177_219_015_05,
    glaisher: 1.282_427_129_100_622_636_9,
    pi: core::f64::consts::PI,
};
