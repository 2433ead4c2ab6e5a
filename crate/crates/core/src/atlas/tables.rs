//! Structure strings of the maximal subgroups that pair with an odd-order
//! maximal subgroup in the two sporadic groups where such pairs exist.

/// `H = 23:11` in `M23`.
pub const M23_ODD: &str = "23:11";

/// Maximal subgroups of `M23` coprime to `23:11`.
pub const M23_PARTNERS: [&str; 4] = [
    "PSL_3(4):{2_2}",
    "2^4:A_7",
    "A_8",
    "2^4:(3\\times A_5):2",
];

/// `H = 47:23` in the Baby Monster.
pub const BABY_MONSTER_ODD: &str = "47:23";

/// Maximal subgroups of the Baby Monster coprime to `47:23`.
pub const BABY_MONSTER_PARTNERS: [&str; 27] = [
    "2^.({^2}E_6(2)):2",
    "2^{9+16}.PSp_8(2)",
    "Th",
    "(2^2 \\times F_4(2)):2",
    "2^{2+10+20}.(M_{22}:2 \\times S_3)",
    "2^{5+5+10+10}.PSL_5(2)",
    "S_3 \\times Fi_{22}:2",
    "[2^{35}].(S_5 \\times PSL_3(2))",
    "HN:2",
    "P\\Omega_8^+(3):S_4",
    "3^{1+8}:{2^{1+6}}^.PSU_4(2).2",
    "5:4 \\times HS:2",
    "(3^2:D_8 \\times PSU_4(3).2^2).2",
    "S_4 \\times {^2}F_4(2)",
    "3^{2+3+6}.(S_4 \\times 2S_4)",
    "S_5 \\times M_{22}:2",
    "{5^3}^.PSL_3(5)",
    "(S_6 \\times PSL_3(4):2).2",
    "5^{1+4}:2^{1+4}.A_5.4",
    "(S_6 \\times S_6).4",
    "5^2:4S_4 \\times S_5",
    "PSL_2(49)^.2",
    "M_{11}",
    "PSL_2(31)",
    "PSL_3(3)",
    "PSL_2(17):2",
    "PSL_2(11):2",
];
