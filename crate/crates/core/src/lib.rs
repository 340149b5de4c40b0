pub mod exactalg;
pub mod classify;
pub mod curve;
pub mod ratcalc;
pub mod series;
