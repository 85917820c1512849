// Generated by tests/reference/gen_reference.py; do not edit by hand.
#![allow(dead_code)]
pub type C = (f64, f64);
#[allow(non_snake_case)]
pub const fn C(re: f64, im: f64) -> C { (re, im) }

pub const LN_GAMMA_2_3I: C = C(-2.0928517530927335, 2.302396543466868);
pub const LN_GAMMA_POINTS: &[(C, C)] = &[
    (C(0.3, -7.5), C(-11.264889713443322, -7.300504415025125)),
    (C(-3.7, 0.2), C(-1.6364330925624564, -12.663282679635772)),
    (C(25.0, 1.0), C(54.764329724578616, 3.1990199209337575)),
    (C(0.01, 0.01), C(4.252825229690083, -0.7910066279294383)),
    (C(-0.5, -40.0), C(-65.60187211160225, -105.9729241933948)),
];
pub const J_1P2I_3MI: C = C(8.285709898150678, 1.547633851233571);
pub const DJ_1P2I_3MI: C = C(-2.143318090324692, 9.602526891929148);
pub const EXPSTEP_NU1: C = C(15.780219997051423, -19.872980228323623);
pub const EXPSTEP_NU2: C = C(0.5293050582700239, 12.091325975454893);
pub const EXPSTEP_Q: C = C(12.649110640673518, 12.649110640673518);
pub const I_LIVE: C = C(152225952058.62103, -1108549166788.9722);
pub const DI_LIVE: C = C(-1157751260611.1077, 71456790260.78);
pub const J_LIVE: C = C(-0.36989840629427934, 2.5229029278570603);
pub const DJ_LIVE: C = C(-2.6399426882450707, 0.13875519740907735);
/// (nu, z, J, J', I, I')
pub const BESSEL_POINTS: &[(C, C, C, C, C, C)] = &[
    (C(2.5, 1.0), C(30.0, 5.0), C(2.264234394885172, -0.7774021307458655), C(-0.8141908608860002, -2.2321026601177865), C(95659836201.9907, -695508012055.8486), C(97517925474.75493, -686279818160.1548)),
    (C(24.0, 3.0), C(12.6, 12.6), C(0.009503474592364806, 0.000693603315641142), C(0.008545292803450972, -0.009751657820065138), C(0.019600882903848805, 4.771383846151198e-05), C(0.026659641804736275, -0.012734900542826399)),
    (C(0.0, 0.0), C(38.0, 0.0), C(0.11433273906115012, 0.0), C(0.059161889887760125, 0.0), C(2068504714851044.8, 0.0), C(2041103569981368.8, 0.0)),
    (C(5.0, -2.0), C(-20.0, 15.0), C(-6242811.021943916, 1959774.8352383785), C(1865478.8736557039, 6045774.588451579), C(5309690816.564527, 10320145412.499096), C(-5331211965.229392, -10364286908.53934)),
    (C(0.25, 0.75), C(0.5, -0.1), C(0.7022126807152523, -0.9768798235882039), C(1.6659218493511287, 1.1021924383613786), C(0.6646247390435658, -1.0804097033211952), C(1.7529628467507086, 0.5973433078550109)),
    (C(12.0, -6.0), C(3.0, 17.0), C(544696605.892614, 290405328.64238834), C(276814080.7086831, -703944138.2844495), C(5745.912184170108, -16688.149825857014), C(-7004.100433245435, 11179.94205669533)),
    (C(1.0, 1.0), C(55.0, 8.0), C(-26.02536659527006, -21.516664743578374), C(-21.24778985092584, 26.1888238913718), C(-2.2834508364259464e+21, 4.109719104331526e+22), C(-2.3299280644488364e+21, 4.072989068819744e+22)),
    (C(0.5, 0.0), C(60.0, -5.0), C(-2.6259775775281677, 7.164156026425634), C(-7.138151089064872, -2.683272543124634), C(1.430104585507704e+24, 5.694714694435872e+24), C(1.4221966266582858e+24, 5.646599742078121e+24)),
    (C(0.5, 0.5), C(48.0, -30.0), C(-1132058316082.755, 505002678619.62305), C(-494203576060.4154, -1130640643854.5823), C(-4.541947233068112e+18, 3.7088462018875286e+19), C(-4.333823103134212e+18, 3.682863325562606e+19)),
    (C(2.0, -1.0), C(-45.0, 10.0), C(-5996.317904770417, -2394.1004913301595), C(-2453.233182002157, 5949.560179140994), C(-4.152889006434275e+19, 1.9032065273637126e+19), C(4.107514117724613e+19, -1.8971784660208062e+19)),
];
pub const AI_1P5_M2I: C = C(-0.13091794569465862, 0.046358547587048195);
/// (z, Ai, Ai', Bi, Bi')
pub const AIRY_POINTS: &[(C, C, C, C, C)] = &[
    (C(1.5, -2.0), C(-0.13091794569465862, 0.046358547587048195), C(0.1641490955452542, -0.15233207018896208), C(-0.45105814237785186, -0.3880941420969134), C(-1.2446407821497947, -0.47896456660499337)),
    (C(4.2, 3.1), C(0.001749139824396937, -0.0006466675189543091), C(-0.004308179346124508, 0.0002247118321207832), C(37.31702452845964, 1.3152013809538436), C(78.58324114875661, 30.607434788227643)),
    (C(8.9, 0.2), C(2.7633187942128525e-09, -1.8992702966678897e-09), C(-8.382672604885123e-09, 5.627589364551937e-09), C(13213778.023983596, 8864834.133590914), C(38739647.02779281, 26644690.97532258)),
    (C(-8.5, 1.0), C(-3.0583612130793467, 0.09943367849582598), C(0.7262020185900089, 8.85742907624088), C(-0.10105948900040783, -3.0406094230922953), C(-8.909670837414692, 0.7249969696391876)),
    (C(6.0, 0.0), C(9.947694360252889e-06, 0.0), C(-2.4765200397034955e-05, 0.0), C(6536.446104809864, 0.0), C(15725.602621930477, 0.0)),
    (C(12.0, 5.0), C(2.1001897847642028e-13, 7.872725471160126e-13), C(-1.952027428958897e-13, -2.9442885933880374e-12), C(3423551952.959619, -54067696242.63629), C(50686401806.06251, -187743866270.53036)),
    (C(-15.0, 3.0), C(15515.79805213813, -4571.311979784987), C(-23507.95739858863, -58653.71223089736), C(4571.311980730206, 15515.798049806806), C(58653.712240358305, -23507.957395842204)),
    (C(-16.022872310938673, 11.96944288207913), C(-1.0717620416917135e+20, 2.1154889120553117e+20), C(1.0462812844333156e+21, 1.5787106671463154e+20), C(-2.1154889120553117e+20, -1.0717620416917135e+20), C(-1.5787106671463154e+20, 1.0462812844333156e+21)),
    (C(0.0, 10.0), C(-434317.24922197417, -189054.14713057518), C(553379.5531345186, 1382962.4524352483), C(189054.14713053626, -434317.2492218753), C(-1382962.4524355587, 553379.5531346517)),
    (C(-9.5, 0.0), C(0.3191032477191282, 0.0), C(-0.10809531881187123, 0.0), C(0.0377854324894665, 0.0), C(0.9847140700021197, 0.0)),
    (C(9.2, -0.5), C(5.589099339030576e-11, 1.3708291442268646e-09), C(-2.821015550224368e-10, -4.1912953294215884e-09), C(2594592.406619624, -38136885.42613617), C(4598976.419682337, -114877887.71380739)),
    (C(30.0, -2.0), C(-8.664838991393328e-51, -3.847549239217227e-49), C(1.1755376853283381e-49, 2.1101625566197056e-48), C(-4.20638667942208e+45, 7.530254748601094e+46), C(-9.234353726429617e+45, 4.128206538527525e+47)),
    (C(-40.0, -1.0), C(-14.851347835850882, 60.82286124704611), C(-383.6202721485303, -98.36094976415562), C(60.82325041905061, 14.851247641300848), C(-98.36155032207378, 383.61780200347)),
    (C(-12.5, 21.650635094610966), C(1.6982891441041418e+35, -9.805076945103454e+34), C(-8.474376876407703e+35, -4.8926837708083274e+35), C(9.805076945103454e+34, 1.6982891441041418e+35), C(4.8926837708083274e+35, -8.474376876407703e+35)),
    (C(-12.5, -21.650635094610966), C(1.6982891441041418e+35, 9.805076945103454e+34), C(-8.474376876407703e+35, 4.8926837708083274e+35), C(9.805076945103454e+34, -1.6982891441041418e+35), C(4.8926837708083274e+35, 8.474376876407703e+35)),
];
// Ai(0), -Ai'(0), sqrt(3)Ai(0), -sqrt(3)Ai'(0) as (hi, lo)
pub const AIRY_DD_CONSTANTS: [(f64, f64); 4] = [(0.3550280538878172, 2.05233632436212e-17), (0.2588194037928068, -2.522243111610832e-17), (0.6149266274460007, 5.0899207794891416e-17), (0.4482883573538264, -2.5363237774417305e-17)];
pub const JACOBI_2: C = C(-0.9125, 0.75);
pub const JACOBI_5: C = C(-0.7255905036799998, -0.7393625135733335);
pub const EXPSTEP_F_AT_1P1I: C = C(265783719.46565175, 77648824.50702731);
pub const LINEAR_F_AT_5P05I: C = C(0.05098327656723085, 0.11569822580472229);
pub const SQWELL_F_AT_3P1I: C = C(6.760874690476678, 1.1730265408704303);
pub const EXPSTEP_ROOTS: &[C] = &[
    C(2.2811377651772475, 4.806414184662854),
    C(2.5427795994178055, 3.6921725158896543),
    C(2.6435091037955325, 2.097111653841208),
];
pub const LINEAR_ROOTS: &[C] = &[
    C(4.29596972715414, 1.565360516527651),
    C(6.595240855614243, 0.0),
    C(10.781386826834584, 0.0),
];
pub const SQWELL_V0_0_ROOTS: &[C] = &[
    C(0.4619306130970575, 0.0),
    C(1.8754913646557727, 0.0),
    C(4.334797248222312, 0.0),
    C(7.963160072987923, 0.0),
];
pub const SQWELL_V0_5_ROOTS: &[C] = &[
    C(-4.581441401398865, 0.0),
    C(-3.347075653267077, 0.0),
    C(-1.364702517899071, 0.0),
    C(1.45581416218505, 0.0),
    C(5.711475590389427, 0.0),
    C(11.338058415705145, 0.0),
    C(18.23591111511909, 0.0),
    C(26.382049872566675, 0.0),
    C(35.7690973424783, 0.0),
];
pub const SQWELL_V0_M5_ROOTS: &[C] = &[
    C(5.571604785406504, 0.0),
    C(7.30653177468929, 0.0),
    C(10.240846240945354, 0.0),
    C(14.397866084471213, 0.0),
    C(19.78700447163157, 0.0),
    C(26.411092023059165, 0.0),
    C(34.270668701005825, 0.0),
    C(43.36560482329212, 0.0),
];
pub const HERMITIAN_V0_5_A_2: &[f64] = &[-4.590129963116683, -3.3895300107052044, -1.5271167543869073];
pub const HERMITIAN_V0_20_A_1: &[f64] = &[-18.360519852466734, -13.558120042820818, -6.108467017547629];
