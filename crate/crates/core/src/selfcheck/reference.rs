// High-precision reference values (mpmath, 40 significant digits, rounded to f64).
#![allow(clippy::approx_constant)]

pub(crate) const NORMAL_CDF: &[(f64, f64)] = &[
    (-8.0, 6.220960574271784e-16),
    (-7.75, 4.5946274357785954e-15),
    (-7.5, 3.1908916729108963e-14),
    (-7.25, 2.0838581586720695e-13),
    (-7.0, 1.279812543885835e-12),
    (-6.75, 7.392257778017822e-12),
    (-6.5, 4.016000583859118e-11),
    (-6.25, 2.0522634252189388e-10),
    (-6.0, 9.86587645037698e-10),
    (-5.75, 4.462172453901612e-09),
    (-5.5, 1.8989562465887718e-08),
    (-5.25, 7.604960516488715e-08),
    (-5.0, 2.866515718791939e-07),
    (-4.75, 1.0170832425687032e-06),
    (-4.5, 3.3976731247300603e-06),
    (-4.25, 1.068852577493442e-05),
    (-4.0, 3.1671241833119924e-05),
    (-3.75, 8.841728520080387e-05),
    (-3.5, 0.00023262907903552504),
    (-3.25, 0.000577025042390767),
    (-3.0, 0.0013498980316300946),
    (-2.75, 0.002979763235054557),
    (-2.5, 0.006209665325776135),
    (-2.25, 0.012224472655044703),
    (-2.0, 0.02275013194817921),
    (-1.75, 0.04005915686381709),
    (-1.5, 0.06680720126885807),
    (-1.25, 0.10564977366685525),
    (-1.0, 0.15865525393145705),
    (-0.75, 0.2266273523768682),
    (-0.5, 0.3085375387259869),
    (-0.25, 0.4012936743170763),
    (0.0, 0.5),
    (0.25, 0.5987063256829237),
    (0.5, 0.6914624612740131),
    (0.75, 0.7733726476231318),
    (1.0, 0.8413447460685429),
    (1.25, 0.8943502263331448),
    (1.5, 0.9331927987311419),
    (1.75, 0.9599408431361829),
    (2.0, 0.9772498680518208),
    (2.25, 0.9877755273449553),
    (2.5, 0.9937903346742238),
    (2.75, 0.9970202367649454),
    (3.0, 0.9986501019683699),
    (3.25, 0.9994229749576092),
    (3.5, 0.9997673709209645),
    (3.75, 0.9999115827147992),
    (4.0, 0.9999683287581669),
    (4.25, 0.9999893114742251),
    (4.5, 0.9999966023268753),
    (4.75, 0.9999989829167575),
    (5.0, 0.9999997133484281),
    (5.25, 0.9999999239503948),
    (5.5, 0.9999999810104375),
    (5.75, 0.9999999955378276),
    (6.0, 0.9999999990134123),
    (6.25, 0.9999999997947736),
    (6.5, 0.99999999995984),
    (6.75, 0.9999999999926077),
    (7.0, 0.9999999999987201),
    (7.25, 0.9999999999997916),
    (7.5, 0.9999999999999681),
    (7.75, 0.9999999999999954),
    (8.0, 0.9999999999999993),
    (-37.5, 4.605353009581955e-308),
    (-20.0, 2.7536241186062337e-89),
    (-12.3, 4.5287069561587846e-35),
    (-0.892, 0.1861964661974241),
    (0.292, 0.6148566880148413),
    (1e-08, 0.5000000039894228),
    (-1e-08, 0.4999999960105772),
    (9.0, 1.0),
];

pub(crate) const NORMAL_QUANTILE: &[(f64, f64)] = &[
    (1e-15, -7.941345326170997),
    (1e-14, -7.650628092935269),
    (1e-12, -7.034483825301132),
    (1e-10, -6.361340902404057),
    (1e-08, -5.612001244174789),
    (1e-06, -4.753424308822899),
    (1e-05, -4.264890793922825),
    (0.0001, -3.7190164854556804),
    (0.001, -3.0902323061678136),
    (0.005, -2.575829303548901),
    (0.01, -2.326347874040841),
    (0.02, -2.053748910631823),
    (0.02425, -1.972961051311885),
    (0.025, -1.9599639845400543),
    (0.05, -1.6448536269514726),
    (0.075, -1.439531470938456),
    (0.1, -1.2815515655446004),
    (0.125, -1.150349380376008),
    (0.15, -1.0364333894937896),
    (0.175, -0.9345892910734802),
    (0.2, -0.8416212335729142),
    (0.225, -0.7554150263604692),
    (0.25, -0.6744897501960817),
    (0.275, -0.5977601260424784),
    (0.3, -0.5244005127080408),
    (0.325, -0.4537621901698794),
    (0.35, -0.3853204664075677),
    (0.375, -0.31863936396437514),
    (0.4, -0.2533471031357997),
    (0.425, -0.18911842627279252),
    (0.45, -0.12566134685507402),
    (0.475, -0.06270677794321385),
    (0.5, 0.0),
    (0.525, 0.06270677794321385),
    (0.55, 0.12566134685507416),
    (0.575, 0.18911842627279238),
    (0.6, 0.2533471031357997),
    (0.625, 0.31863936396437514),
    (0.65, 0.3853204664075677),
    (0.675, 0.45376219016987956),
    (0.7, 0.5244005127080407),
    (0.725, 0.5977601260424784),
    (0.75, 0.6744897501960817),
    (0.775, 0.7554150263604693),
    (0.8, 0.8416212335729144),
    (0.825, 0.93458929107348),
    (0.85, 1.0364333894937894),
    (0.875, 1.150349380376008),
    (0.9, 1.2815515655446006),
    (0.925, 1.4395314709384561),
    (0.95, 1.6448536269514722),
    (0.975, 1.9599639845400538),
    (0.97575, 1.972961051311885),
    (0.99, 2.3263478740408408),
    (0.999, 3.090232306167813),
    (0.9999, 3.7190164854557084),
    (0.999999, 4.753424308817087),
    (0.999999999, 5.9978070196016375),
    (0.999999999999, 7.0344869100478356),
    (0.9986501, 2.999999555858318),
    (0.186, -0.892733324320856),
    (0.615, 0.2923748962268042),
];

pub(crate) const LN_GAMMA: &[(f64, f64)] = &[
    (0.001, 6.907178885383853),
    (0.01, 4.599479878042022),
    (0.05, 2.9688792010517306),
    (0.1, 2.252712651734206),
    (0.2, 1.5240638224307845),
    (0.25, 1.2880225246980774),
    (0.3, 1.0957979948180756),
    (0.5, 0.5723649429247001),
    (0.75, 0.20328095143129538),
    (0.9, 0.06637623973474295),
    (0.99, 0.005854806764709781),
    (1.0, 0.0),
    (1.01, -0.005690307946069651),
    (1.1, -0.049872441259839764),
    (1.25, -0.09827183642181316),
    (1.5, -0.12078223763524522),
    (1.75, -0.08440112102048555),
    (1.9, -0.03898427592308336),
    (1.99, -0.004195529088791668),
    (2.0, 0.0),
    (2.01, 0.004260022907098346),
    (2.5, 0.2846828704729192),
    (3.0, 0.6931471805599453),
    (3.5, 1.2009736023470743),
    (4.0, 1.791759469228055),
    (4.5, 2.4537365708424423),
    (5.0, 3.1780538303479458),
    (6.0, 4.787491742782046),
    (7.5, 7.534364236758733),
    (8.0, 8.525161361065415),
    (9.5, 11.689333420797269),
    (10.0, 12.801827480081469),
    (11.5, 16.292000476567242),
    (12.7, 19.233043179570085),
    (13.5, 21.2600761562447),
    (15.0, 25.19122118273868),
    (20.0, 39.339884187199495),
    (25.5, 56.389167643719944),
    (30.0, 71.25703896716801),
    (37.2, 96.4397101615684),
    (45.0, 125.3172711493569),
    (50.0, 144.5657439463449),
    (60.5, 186.57891783333784),
    (75.0, 247.57291409618688),
    (88.8, 308.26781816251065),
    (100.0, 359.1342053695754),
    (120.0, 453.0248962384961),
    (150.0, 600.0094705553274),
    (171.5, 709.1431630309282),
    (200.0, 857.9336698258575),
    (250.0, 1128.5237708729908),
    (0.200000001, 1.5240638171417447),
    (3.3, 0.9870985778947344),
    (7.0, 6.579251212010101),
    (0.6, 0.39823385806923495),
];

pub(crate) const REG_INC_GAMMA: &[(f64, f64, f64)] = &[
    (0.1, 0.001, 0.5267685683924451),
    (0.1, 0.03, 0.738235053233935),
    (0.1, 0.09000000000000001, 0.819593291244852),
    (0.1, 0.1, 0.8275517595858506),
    (0.1, 0.17, 0.8674253921358729),
    (0.1, 0.4, 0.9275738335537044),
    (0.2, 0.002, 0.31415124508770215),
    (0.2, 0.06, 0.6143470022433121),
    (0.2, 0.18000000000000002, 0.7508209046334502),
    (0.2, 0.2, 0.764434597502919),
    (0.2, 0.34, 0.8322903772282845),
    (0.2, 0.8, 0.9282024229938035),
    (0.5, 0.005, 0.07965567455405796),
    (0.5, 0.15, 0.4161175792296348),
    (0.5, 0.45, 0.6572182888520887),
    (0.5, 0.5, 0.6826894921370859),
    (0.5, 0.85, 0.8077120228884802),
    (0.5, 2.0, 0.9544997361036416),
    (1.0, 0.01, 0.009950166250831947),
    (1.0, 0.3, 0.2591817793182821),
    (1.0, 0.9, 0.5934303402594009),
    (1.0, 1.0, 0.6321205588285577),
    (1.0, 1.7, 0.8173164759472653),
    (1.0, 4.0, 0.9816843611112658),
    (2.5, 0.025, 2.9209539998950108e-05),
    (2.5, 0.75, 0.08693018545560453),
    (2.5, 2.25, 0.5201165618867006),
    (2.5, 2.5, 0.5841198130044921),
    (2.5, 4.25, 0.8692522107255748),
    (2.5, 10.0, 0.9987502694369687),
    (5.0, 0.05, 2.4979513360065104e-09),
    (5.0, 1.5, 0.018575936222140675),
    (5.0, 4.5, 0.4678964236252845),
    (5.0, 5.0, 0.5595067149347875),
    (5.0, 8.5, 0.9256360201854197),
    (5.0, 20.0, 0.9999830552560699),
    (7.0, 0.07, 1.536979881701872e-12),
    (7.0, 2.1, 0.005862117808004098),
    (7.0, 6.3, 0.4417668730063542),
    (7.0, 7.0, 0.5502889441513011),
    (7.0, 11.9, 0.9515649715285668),
    (7.0, 28.0, 0.9999994175294445),
    (13.5, 0.135, 6.941742417502935e-23),
    (13.5, 4.05, 0.00016471792733640167),
    (13.5, 12.15, 0.38637199083131946),
    (13.5, 13.5, 0.5362051843794418),
    (13.5, 22.95, 0.9869582031937338),
    (13.5, 54.0, 0.9999999999879422),
    (30.0, 0.3, 5.806457425277673e-49),
    (30.0, 9.0, 2.765418423110174e-08),
    (30.0, 27.0, 0.3065345454721574),
    (30.0, 30.0, 0.52428301389368),
    (30.0, 51.0, 0.999414384362708),
    (30.0, 120.0, 1.0),
    (100.0, 1.0, 3.9812808189568546e-159),
    (100.0, 30.0, 7.338468632878333e-24),
    (100.0, 90.0, 0.15822098918643016),
    (100.0, 100.0, 0.5132987982791487),
    (100.0, 170.0, 0.9999999975699227),
    (100.0, 400.0, 1.0),
    (2.5, 2.63, 0.6150196239732807),
    (0.5, 30.0, 0.9999999999999906),
    (3.0, 0.0, 0.0),
];

pub(crate) const REG_INC_BETA: &[(f64, f64, f64, f64)] = &[
    (0.5, 0.5, 0.01, 0.06376856085851985),
    (0.5, 0.5, 0.1, 0.20483276469913345),
    (0.5, 0.5, 0.35, 0.4030133159793217),
    (0.5, 0.5, 0.5, 0.5),
    (0.5, 0.5, 0.8, 0.7048327646991335),
    (0.5, 0.5, 0.99, 0.9362314391414801),
    (1.0, 6.0, 0.01, 0.058519850599),
    (1.0, 6.0, 0.1, 0.468559),
    (1.0, 6.0, 0.35, 0.9245811093749999),
    (1.0, 6.0, 0.5, 0.984375),
    (1.0, 6.0, 0.8, 0.999936),
    (1.0, 6.0, 0.99, 0.999999999999),
    (2.0, 5.0, 0.01, 0.001460447605),
    (2.0, 5.0, 0.1, 0.114265),
    (2.0, 5.0, 0.35, 0.680920078125),
    (2.0, 5.0, 0.5, 0.890625),
    (2.0, 5.0, 0.8, 0.9984),
    (2.0, 5.0, 0.99, 0.999999999405),
    (4.0, 3.0, 0.01, 1.4761e-07),
    (4.0, 3.0, 0.1, 0.0012700000000000003),
    (4.0, 3.0, 0.35, 0.11742390624999997),
    (4.0, 3.0, 0.5, 0.34375),
    (4.0, 3.0, 0.8, 0.90112),
    (4.0, 3.0, 0.99, 0.99998044641),
    (1.0, 1.0, 0.01, 0.01),
    (1.0, 1.0, 0.1, 0.1),
    (1.0, 1.0, 0.35, 0.35),
    (1.0, 1.0, 0.5, 0.5),
    (1.0, 1.0, 0.8, 0.8),
    (1.0, 1.0, 0.99, 0.99),
    (0.2, 3.0, 0.01, 0.5237545708662276),
    (0.2, 3.0, 0.1, 0.8058587203701029),
    (0.2, 3.0, 0.35, 0.9570908672149292),
    (0.2, 3.0, 0.5, 0.9837221365246203),
    (0.2, 3.0, 0.8, 0.9991970917806307),
    (0.2, 3.0, 0.99, 0.9999999114681686),
    (10.0, 30.0, 0.01, 4.879652479668034e-12),
    (10.0, 30.0, 0.1, 0.004164720867681863),
    (10.0, 30.0, 0.35, 0.9213002697418573),
    (10.0, 30.0, 0.5, 0.9994674901827239),
    (10.0, 30.0, 0.8, 0.9999999999999671),
    (10.0, 30.0, 0.99, 1.0),
    (38.0, 2.0, 0.01, 3.862000000000003e-75),
    (38.0, 2.0, 0.1, 3.5200000000000072e-37),
    (38.0, 2.0, 0.35, 1.2148392321945915e-16),
    (38.0, 2.0, 0.5, 7.275957614183426e-11),
    (38.0, 2.0, 0.8, 0.001786150119335984),
    (38.0, 2.0, 0.99, 0.9419253411143342),
    (7.5, 7.5, 0.01, 3.133801698104913e-12),
    (7.5, 7.5, 0.1, 5.77250096691897e-05),
    (7.5, 7.5, 0.35, 0.12101893949791842),
    (7.5, 7.5, 0.5, 0.5),
    (7.5, 7.5, 0.8, 0.9945552264708226),
    (7.5, 7.5, 0.99, 0.9999999999968662),
    (3.0, 0.7, 0.01, 5.367111806638315e-07),
    (3.0, 0.7, 0.1, 0.0005482183754250388),
    (3.0, 0.7, 0.35, 0.025195133978591754),
    (3.0, 0.7, 0.5, 0.07741115524965335),
    (3.0, 0.7, 0.8, 0.3709259354277374),
    (3.0, 0.7, 0.99, 0.9093844581726537),
    (4.0, 3.0, 0.0, 0.0),
    (4.0, 3.0, 1.0, 1.0),
];
