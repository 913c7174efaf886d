//! Model-curve reference values, generated once with 50-digit arithmetic
//! (mpmath) and rounded to shortest round-trip f64 literals. Each row is
//! `(cf, poisson, negbin r=0.42, negbin r=1, negbin r=10)`, with every
//! model column evaluated at exactly the f64 `cf` stored in the row.

/// Dispersion values matching the table columns, in column order.
pub const CURVE_DISPERSIONS: [f64; 3] = [0.42, 1.0, 10.0];

/// 20 log-spaced points spanning cf in [1, 10N] for N = 100.
pub const CURVE_N100: [(f64, f64, f64, f64, f64); 20] = [
    (1.0, 0.9950166250831947, 0.9834134435104839, 0.9900990099009901, 0.9945219286997007),
    (1.4384498882876628, 1.4281536258625784, 1.4044104932096415, 1.4180519219997958, 1.4271348036864897),
    (2.0691380811147897, 2.047878302994006, 1.999523297685545, 2.0271926656914028, 2.0457843405883884),
    (2.9763514416313184, 2.9324942934622595, 2.834670265923986, 2.8903252057035282, 2.9282032667382487),
    (4.281332398719394, 4.190977416239515, 3.9949134378115687, 4.105559739445725, 4.182221193782875),
    (6.158482110660263, 5.972681265538053, 5.584753762623689, 5.801215303964711, 5.954921634814433),
    (8.858667904100827, 8.477622342151887, 7.723437023924179, 8.137769894359613, 8.44191451547236),
    (12.742749857031338, 11.96427593209189, 10.532041818725066, 11.302500491774746, 11.893373664388742),
    (18.32980710832436, 16.748003137864163, 14.110259909873964, 15.490439438935653, 16.60971849082698),
    (26.366508987303583, 23.17692151530171, 18.50509228627006, 20.86510832546043, 22.91404144813395),
    (37.926901907322495, 31.563851839152772, 23.68082788544609, 27.49782774995323, 31.082055698911216),
    (54.55594781168519, 42.04825347162813, 29.50513084025245, 35.298510723222066, 41.20996144440623),
    (78.47599703514612, 54.3770802822105, 35.76281815228213, 43.970056668008056, 53.02193085959093),
    (112.88378916846891, 67.65911257322985, 42.19542709619831, 53.026014620181606, 65.68359087080769),
    (162.37767391887218, 80.28473030740868, 48.55032305850492, 61.88700109029847, 77.79108191114867),
    (233.57214690901222, 90.32593380545583, 54.61985620520003, 70.02147783421594, 87.74383914723374),
    (335.9818286283782, 96.52584286087631, 60.26008674114099, 77.06326423864837, 94.47929566522258),
    (483.29302385717534, 99.20368468928515, 65.39044494189083, 82.85595817026505, 98.06031834575973),
    (695.1927961775606, 99.90432112777425, 69.98207644661765, 87.4244333599734, 99.48971944579272),
    (1000.0, 99.99546000702375, 74.04265556023451, 90.9090909090909, 99.90234375),
];

/// 20 log-spaced points spanning cf in [1, 10N] for N = 11000.
pub const CURVE_N11000: [(f64, f64, f64, f64, f64); 20] = [
    (1.0, 0.9999545468319246, 0.9998463471743109, 0.9999090991728025, 0.9999500018181281),
    (1.8421986389934772, 1.842044388703337, 1.8416772646930764, 1.8418901728507862, 1.8420289655686046),
    (3.39369582550942, 3.3931723715535127, 3.3919269187326746, 3.392649132854912, 3.393120037999539),
    (6.2518618309113, 6.2500855412480965, 6.245861691631112, 6.248310596863281, 6.2499079863004665),
    (11.517171356080066, 11.511144130885329, 11.496827387611711, 11.505125310654977, 11.510541870965474),
    (21.21691739722536, 21.196468838114903, 21.14799261380467, 21.17607276208075, 21.19442687252852),
    (39.08577635280559, 39.016417712477754, 38.85259099258236, 38.94738645856506, 39.00949989782784),
    (72.00376400114189, 71.76861635574458, 71.21689062950239, 71.53550711279176, 71.74521419749375),
    (132.64523604531112, 131.84867930528156, 130.00240474527902, 131.06477082141734, 131.76972492240563),
    (244.3588733116407, 241.6647118187641, 235.55707145697747, 239.0485430705935, 241.39964906369272),
    (450.1575838406841, 441.07096404248387, 421.27560623077545, 432.45984921952345, 440.18916638184487),
    (829.2796882839003, 798.7913310376684, 736.8685038554001, 771.1438744793313, 795.9064772176636),
    (1527.6979131015364, 1426.3585073779204, 1243.746932487587, 1341.401840999253, 1417.2058685804939),
    (2814.323016308826, 2483.14002086485, 1992.1547719613907, 2240.975047626251, 2455.687561355298),
    (5184.542030332137, 4134.057845769226, 2980.5821368145134, 3523.7303735114183, 4059.71128121431),
    (9550.956272082343, 6383.547648680292, 4130.032720913055, 5112.196123721324, 6216.023986673284),
    (17594.758645516307, 8778.079838687087, 5312.088332467332, 6768.4552788147785, 8505.45588140577),
    (32413.04043018886, 10422.325528065267, 6410.823301552019, 8212.819033152578, 10168.577157396287),
    (59711.258966134475, 10951.703732408616, 7360.807291916615, 9288.815645922099, 10856.049563930115),
    (110000.0, 10999.500600772613, 8144.692111625795, 10000.0, 10989.2578125),
];
