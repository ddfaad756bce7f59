//! Published evaluations used as reference data.

/// Fifteen explicit values of `W(m, k)`.
pub const W_VALUES: &[(u32, u32, &str)] = &[
    (2, 1, "-1/2*z(4)"),
    (3, 1, "12*z(5)-6*z(2)*z(3)"),
    (4, 1, "12*z(3)^2-18*z(6)"),
    (5, 1, "360*z(7)-120*z(3)*z(4)-120*z(2)*z(5)"),
    (4, 2, "240*z(7)-60*z(3)*z(4)-96*z(2)*z(5)"),
    (3, 3, "180*z(7)-45*z(3)*z(4)-72*z(2)*z(5)"),
    (4, 3, "-1497/4*z(8)+576*z(3)*z(5)-144*z(2)*z(3)^2"),
    (3, 4, "-366*z(8)+432*z(3)*z(5)-72*z(2)*z(3)^2"),
    (5, 2, "-610*z(8)+720*z(3)*z(5)-120*z(2)*z(3)^2"),
    (6, 2, "13440*z(9)+240*z(3)^3-4320*z(2)*z(7)-2520*z(3)*z(6)-3240*z(4)*z(5)"),
    (4, 4, "8064*z(9)+288*z(3)^3-2880*z(2)*z(7)-1260*z(3)*z(6)-2016*z(4)*z(5)"),
    (3, 5, "6720*z(9)+120*z(3)^3-2160*z(2)*z(7)-1260*z(3)*z(6)-1620*z(4)*z(5)"),
    (5, 3, "10080*z(9)+360*z(3)^3-3600*z(2)*z(7)-1575*z(3)*z(6)-2520*z(4)*z(5)"),
    (5, 4, "-84483/4*z(10)-11520*z(2)*z(3)*z(5)+28800*z(3)*z(7)-3600*z(4)*z(3)^2+14400*z(5)^2"),
    (4, 5, "-17514*z(10)-8640*z(2)*z(3)*z(5)+23040*z(3)*z(7)-3240*z(4)*z(3)^2+11520*z(5)^2"),
];

/// One Euler sum `coeff * S_{parts, q}` inside a combination.
pub type EulerTerm = (i64, &'static [u32], u32);

/// A combination of nonlinear Euler sums with its closed form.
#[derive(Clone, Copy, Debug)]
pub struct EulerRow {
    pub label: &'static str,
    pub sums: &'static [EulerTerm],
    pub closed_form: &'static str,
}

const fn row(label: &'static str, sums: &'static [EulerTerm], closed_form: &'static str) -> EulerRow {
    EulerRow { label, sums, closed_form }
}

/// Closed forms of nonlinear Euler sums of weight 6 to 10.
pub const EULER_ROWS: &[EulerRow] = &[
    row("S_{1^2 2,2}", &[(1, &[1, 1, 2], 2)], "41/12*z(6)+2*z(3)^2"),
    row("S_{1^2 2,3}", &[(1, &[1, 1, 2], 3)], "-7*z(7)+19/2*z(3)*z(4)-2*z(2)*z(5)"),
    row("S_{1^3 2,2}", &[(1, &[1, 1, 1, 2], 2)], "83/16*z(7)+27/2*z(3)*z(4)-5/2*z(2)*z(5)"),
    row("S_{1^2 3,2}", &[(1, &[1, 1, 3], 2)], "329/16*z(7)-6*z(3)*z(4)-9/2*z(2)*z(5)"),
    row("S_{1 2^2,2}", &[(1, &[1, 2, 2], 2)], "-217/16*z(7)+5*z(3)*z(4)+13/2*z(2)*z(5)"),
    row("S_{1^2 4,2}", &[(1, &[1, 1, 4], 2)], "1289/96*z(8)-11*z(3)*z(5)+5*S(2,6)"),
    row("S_{1^2 3,3}", &[(1, &[1, 1, 3], 3)], "-443/288*z(8)+9/2*z(3)*z(5)+3/2*z(2)*z(3)^2-23/4*S(2,6)"),
    row("S_{1^2 2^2,2}", &[(1, &[1, 1, 2, 2], 2)], "55/8*z(8)-7*z(3)*z(5)+2*z(2)*z(3)^2+6*S(2,6)"),
    row("S_{3^2,2}", &[(1, &[3, 3], 2)], "677/24*z(8)-35*z(3)*z(5)+4*z(2)*z(3)^2+15/2*S(2,6)"),
    row("S_{2 3,3}", &[(1, &[2, 3], 3)], "-827/48*z(8)+45/2*z(3)*z(5)-3/2*z(2)*z(3)^2-23/4*S(2,6)"),
    row("S_{2 4,2}", &[(1, &[2, 4], 2)], "-403/36*z(8)+20*z(3)*z(5)-3*z(2)*z(3)^2-9/2*S(2,6)"),
    row("S_{1^5,3}", &[(1, &[1, 1, 1, 1, 1], 3)], "60499/288*z(8)-393/2*z(3)*z(5)-15/2*z(2)*z(3)^2+235/4*S(2,6)"),
    row("S_{1^6,2}", &[(1, &[1, 1, 1, 1, 1, 1], 2)], "9301/8*z(8)+31*z(3)*z(5)+16*z(2)*z(3)^2+57*S(2,6)"),
    row("S_{1^3 2,3}", &[(1, &[1, 1, 1, 2], 3)], "-2159/48*z(8)+93/2*z(3)*z(5)+3/2*z(2)*z(3)^2-53/4*S(2,6)"),
    row("S_{1 2^2,3}", &[(1, &[1, 2, 2], 3)], "-6313/288*z(8)+43/2*z(3)*z(5)+1/2*z(2)*z(3)^2-17/4*S(2,6)"),
    row("S_{1^4 2,2}", &[(1, &[1, 1, 1, 1, 2], 2)], "-6631/288*z(8)+90*z(3)*z(5)+3*z(2)*z(3)^2-47/2*S(2,6)"),
    row("S_{1 2 3,2}", &[(1, &[1, 2, 3], 2)], "-181/288*z(8)+15/2*z(3)*z(5)-3/2*z(2)*z(3)^2-7/4*S(2,6)"),
    row("S_{1^3 3,2}", &[(1, &[1, 1, 1, 3], 2)], "809/48*z(8)+23/2*z(3)*z(5)-7/2*z(2)*z(3)^2-33/4*S(2,6)"),
    row("S_{1^5,4}", &[(1, &[1, 1, 1, 1, 1], 4)], "4721/36*z(9)+265/8*z(2)*z(7)-4895/24*z(3)*z(6)+66*z(4)*z(5)-5*z(3)^3"),
    row("S_{1^2 3,4}", &[(1, &[1, 1, 3], 4)], "3895/72*z(9)-5/8*z(2)*z(7)-227/24*z(3)*z(6)-75/2*z(4)*z(5)+z(3)^3"),
    row("S_{1^3 2,4}", &[(1, &[1, 1, 1, 2], 4)], "-449/36*z(9)-7*z(2)*z(7)+11/8*z(3)*z(6)+27*z(4)*z(5)-11/3*z(3)^3"),
    row("S_{1 2^2,4}", &[(1, &[1, 2, 2], 4)], "-775/36*z(9)+85/8*z(2)*z(7)-221/24*z(3)*z(6)+10*z(4)*z(5)+3*z(3)^3"),
    row("S_{1^2 2,5}", &[(1, &[1, 1, 2], 5)], "-1481/72*z(9)-3*z(3)^3-5*z(2)*z(7)+295/24*z(3)*z(6)+18*z(4)*z(5)"),
    row(
        "S_{1 3^2,3}",
        &[(1, &[1, 3, 3], 3)],
        "883/20*z(10)-26*z(5)^2-31/4*z(3)*z(7)-8*z(2)*z(3)*z(5)+3/4*z(3)^2*z(4)+9*z(2)*S(2,6)-21/4*S(2,8)",
    ),
    row("S_{1 3,4}", &[(1, &[1, 3], 4)], "-511/144*z(8)+7*z(3)*z(5)+z(2)*z(3)^2-25/4*S(2,6)"),
    row("S_{2^2,4}", &[(1, &[2, 2], 4)], "11*S(2,6)+457/18*z(8)+6*z(2)*z(3)^2-40*z(3)*z(5)"),
    row(
        "6 S_{1^2 2,4} - S_{1^4,4}",
        &[(6, &[1, 1, 2], 4), (-1, &[1, 1, 1, 1], 4)],
        "-17*S(2,6)-10*z(2)*z(3)^2+104*z(3)*z(5)-5911/72*z(8)",
    ),
    row(
        "S_{1^4,4} + 6 S_{1^2 2,4}",
        &[(1, &[1, 1, 1, 1], 4), (6, &[1, 1, 2], 4)],
        "956/9*z(8)-80*z(3)*z(5)-14*z(2)*z(3)^2+35*S(2,6)",
    ),
    row("S_{1^4,4}", &[(1, &[1, 1, 1, 1], 4)], "13559/144*z(8)-92*z(3)*z(5)-2*z(2)*z(3)^2+26*S(2,6)"),
    row("S_{1^2 2,4}", &[(1, &[1, 1, 2], 4)], "193/96*z(8)+2*z(3)*z(5)-2*z(2)*z(3)^2+3/2*S(2,6)"),
];

/// `zeta*(4, {1}_4)`, equal to `1/24 sum_n Y_4(n) / n^4`.
pub const STAR_HOOK_3_4: &str = "107/16*z(8)-6*z(3)*z(5)+1/2*z(2)*z(3)^2+3/4*S(2,6)";

/// `zeta*(5, {1}_3)`
pub const STAR_HOOK_4_3: &str = "-385/192*z(8)+5*z(3)*z(5)-z(2)*z(3)^2-3/4*S(2,6)";

/// `zeta*(4, {1}_5)`
pub const STAR_HOOK_3_5: &str = "1217/72*z(9)-3*z(2)*z(7)-59/12*z(3)*z(6)-19/4*z(4)*z(5)+1/3*z(3)^3";

/// A published 30-digit row: label, parts, q, value of the closed form,
/// value of the direct sum.
#[derive(Clone, Copy, Debug)]
pub struct TableRow {
    pub label: &'static str,
    pub parts: &'static [u32],
    pub q: u32,
    pub closed_form_value: &'static str,
    pub direct_value: &'static str,
}

const fn trow(label: &'static str, parts: &'static [u32], q: u32, c: &'static str, d: &'static str) -> TableRow {
    TableRow { label, parts, q, closed_form_value: c, direct_value: d }
}

/// Weight 8 and 9 Euler sums to 30 decimal digits.
pub const TABLE_ROWS: &[TableRow] = &[
    trow("S_{1^4,4}", &[1, 1, 1, 1], 4, "1.68625748775730579166360832694", "1.68625748775730579166360833402"),
    trow("S_{1^2 2,4}", &[1, 1, 2], 4, "1.29068714089613697618140723840", "1.29068714089613697618140723441"),
    trow("S_{1^3 2,3}", &[1, 1, 1, 2], 3, "2.82229596096025461026149662829", "2.82229596096025461026149661993"),
    trow("S_{1^2 3,3}", &[1, 1, 3], 3, "1.75388174691782356380634371202", "1.75388174691782356380634370478"),
    trow("S_{1 2^2,3}", &[1, 2, 2], 3, "1.63443098048025390280783629910", "1.63443098048025390280783629225"),
    trow("S_{1^2 4,2}", &[1, 1, 4], 2, "4.88040799023015427295866390307", "4.88040799023015427295866390372"),
    trow("S_{2^2,4}", &[2, 2], 4, "1.13642391274089928376327915373", "1.13642391274089928376327915559"),
    trow("S_{1^5,3}", &[1, 1, 1, 1, 1], 3, "8.20602621468401623725850548850", "8.20602621468401623725850551862"),
    trow("S_{1 2 3,2}", &[1, 2, 3], 2, "3.36374308381687640081618084070", "3.36374308381687640081618083742"),
    trow("S_{1^4 2,2}", &[1, 1, 1, 1, 2], 2, "72.1778863641121208246730431963", "72.1778863641121208246730431899"),
    trow("S_{1^3 3,2}", &[1, 1, 1, 3], 2, "14.5074537674864815323431145949", "14.5074537674864815323431145933"),
    trow("S_{1^6,2}", &[1, 1, 1, 1, 1, 1], 2, "1302.28271941001924714647587730", "1302.28271941001924714647587732"),
    trow("S_{1^5,4}", &[1, 1, 1, 1, 1], 4, "2.31083536190405961638953653685", "2.31083536190405961638953653376"),
    trow("S_{1^2 3,4}", &[1, 1, 3], 4, "1.25355563158689137948838467515", "1.25355563158689137948838467072"),
    trow("S_{1 2^2,4}", &[1, 2, 2], 4, "1.22503753401105341474879224535", "1.22503753401105341474879224098"),
    trow("S_{1^3 2,4}", &[1, 1, 1, 2], 4, "1.50676526085085659032600904678", "1.50676526085085659032600904154"),
];
