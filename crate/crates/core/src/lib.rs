pub mod ordgrp;
pub mod ratlin;
pub mod totalize;
