"""Frozen special-function reference values.

Generated by tools/gen_reference_tables.py from brute-force
series/integral oracles evaluated in arbitrary precision.
Do not edit by hand; regenerate instead.
"""

import numpy as np

E1_X = np.array([
    1e-12,
    1.8617050356415474e-12,
    3.465945639733096e-12,
    6.45256845075097e-12,
    1.201277917758486e-11,
    2.2364251486959665e-11,
    4.1635639611626774e-11,
    7.751327992712225e-11,
    1.443068635694164e-10,
    2.686568145848203e-10,
    5.001597445719775e-10,
    9.31149915094837e-10,
    1.7335264858692575e-09,
    3.2273149881607926e-09,
    6.00830856506039e-09,
    1.1185698311261169e-08,
    2.082447087324207e-08,
    3.87690222892855e-08,
    7.217648402286222e-08,
    1.343713237602643e-07,
    2.501597700903048e-07,
    4.657237036920513e-07,
    8.670401643811239e-07,
    1.6141730401318135e-06,
    3.005114077210223e-06,
    5.594636010219575e-06,
    1.0415562032807319e-05,
    1.93907042855143e-05,
    3.609977181297804e-05,
    6.720712696973202e-05,
    0.00012511984671055096,
    0.00023293624867973123,
    0.00043365858715050743,
    0.0008073443754472987,
    0.001503037089267116,
    0.002798211717844604,
    0.005209444845902485,
    0.009698449702513563,
    0.01805565264908577,
    0.033614299458597625,
    0.06257991057163415,
    0.11650533464120853,
    0.21689856818064157,
    0.40380115660534194,
    0.7517586466500463,
    1.399552858055466,
    2.605554603488381,
    4.850774125953335,
    9.03071061704705,
    16.81251943117808,
    31.299952086845604,
    58.27127841541962,
    108.48393245925735,
    201.96508334559692,
    375.9994126882627,
    700.0000000000001,
])

E1_VALUES = np.array([
    27.053805451028015,
    26.43231269737484,
    25.81081994372241,
    25.18932719007136,
    24.567834436422885,
    23.9463416827792,
    23.324848929144437,
    22.703356175526277,
    22.081863421939037,
    21.46037066840935,
    20.838877914986817,
    20.217385161763776,
    19.595892408912118,
    18.97439965675187,
    18.352906905878825,
    17.73141415740218,
    17.109921413386918,
    16.488428677677433,
    15.866935957430858,
    15.245443265971659,
    14.623950628106059,
    14.002458090015919,
    13.38096573767821,
    12.759473731156586,
    12.137982368441982,
    11.516492204304312,
    10.895004271557003,
    10.27352049297834,
    9.652044448160039,
    9.030582801057772,
    8.409147957339025,
    7.787763010436471,
    7.166470945674616,
    6.545351761897285,
    5.924554299287538,
    5.304355328572992,
    4.685268987595268,
    4.0682485511362865,
    3.4550552890852506,
    2.848921974551942,
    2.2557096114208246,
    1.6858004833290428,
    1.1567917290036713,
    0.6960522316768041,
    0.33923544691498775,
    0.11629810265626464,
    0.021692153285078362,
    0.0013685552798218168,
    1.203334696783248e-05,
    2.8114756535750355e-09,
    7.903056726953433e-16,
    8.324933311475856e-28,
    7.026061771951766e-50,
    9.555818121955041e-91,
    1.3464562190784823e-166,
    1.4065187662338727e-307,
])

SCALED_E1_VALUES = np.array([
    27.05380545105507,
    26.43231269742405,
    25.810819943811868,
    25.189327190233897,
    24.567834436718012,
    23.946341683314742,
    23.324848930115582,
    22.70335617728609,
    22.0818634251256,
    21.460370674174825,
    20.838877925409584,
    20.217385180589194,
    19.595892442882114,
    18.974399717988234,
    18.352907016148755,
    17.73141435574043,
    17.10992176969198,
    16.488429316917703,
    15.866937102650548,
    15.245445314522188,
    14.623954286430642,
    14.00246461129408,
    13.380977339517973,
    12.759494327171712,
    12.138018844518474,
    11.516556635066543,
    10.895117749740809,
    10.273719705707622,
    9.652392891051463,
    9.031189740977808,
    8.410200174467663,
    7.789577274033404,
    7.169579421299631,
    6.550638248548061,
    5.933465819631861,
    5.3192188237137366,
    4.709740323669611,
    4.10789620470298,
    3.518005157584943,
    2.9463142064740766,
    2.401382270448121,
    1.8941038985313474,
    1.4369876182685297,
    1.0423424963663668,
    0.7194255502070099,
    0.47140123164036773,
    0.29368424655166286,
    0.17495516989871432,
    0.10054818323650126,
    0.056301341487069945,
    0.030987859229634263,
    0.016876229878122498,
    0.009134508955984973,
    0.004927074274975817,
    0.0026525425911598185,
    0.0014265364183008865,
])

K1_X = np.array([
    1e-10,
    1.785930965773991e-10,
    3.1895494145104204e-10,
    5.696315066240463e-10,
    1.0173225467603766e-09,
    1.8168678384394157e-09,
    3.244800533387809e-09,
    5.7949897503372514e-09,
    1.0349451641470186e-08,
    1.8483406165282066e-08,
    3.3010087423555146e-08,
    5.895373731263371e-08,
    1.0528730501473832e-07,
    1.8803585832871238e-07,
    3.3581906206513867e-07,
    5.99749661839309e-07,
    1.0711114927913015e-06,
    1.9129311827723905e-06,
    3.4163630347078785e-06,
    6.101388534010404e-06,
    1.0896658717107557e-05,
    1.946068022635348e-05,
    3.475543143127028e-05,
    6.207080122194026e-05,
    0.00011085416597266541,
    0.00019797788769563264,
    0.00035357484017415594,
    0.0006314602557856148,
    0.0011277444244630946,
    0.002014073689127608,
    0.0035969965687636545,
    0.006423987555937805,
    0.011472798299896106,
    0.020489625747863654,
    0.03659305710022977,
    0.06535267380763615,
    0.11671536384918425,
    0.20844558247983638,
    0.3722694204295363,
    0.6648474855558457,
    1.187371711971161,
    2.120563908293373,
    3.7871807487238525,
    6.7636433721290565,
    12.0794001397373,
    21.57297475753152,
    38.5278436433362,
    68.80806900713273,
    122.8864611349525,
    219.46673621529374,
    391.9524401642453,
    700.0000000000001,
])

K1_VALUES = np.array([
    10000000000.0,
    5599320573.774908,
    3135239088.789897,
    1755520873.3564568,
    982972414.3876103,
    550397766.3333741,
    308185353.6790216,
    172562859.1391042,
    96623476.7447007,
    54102582.12462629,
    30293770.118476454,
    16962453.028158933,
    9497821.222225467,
    5318134.577563278,
    2977794.035423621,
    1667362.3406981474,
    933609.6258156796,
    522757.9585615271,
    292708.9392326415,
    163897.11853143532,
    91771.25073349715,
    51385.665156512754,
    28772.48108412795,
    16110.634315424131,
    9020.86025800723,
    5051.068240260762,
    2828.2540246169942,
    1583.6284218643693,
    886.7215571318192,
    496.4992917564784,
    277.99848841743454,
    155.64836139391875,
    87.13353061457914,
    48.75904312409668,
    27.25578157490244,
    15.192255297175825,
    8.406205268136363,
    4.568127435499698,
    2.380011368697183,
    1.1303246123727608,
    0.44329310603937994,
    0.11951927531850746,
    0.015939525010386042,
    0.0005862063470687947,
    2.1085383161096746e-06,
    1.1734431117198568e-10,
    3.77499278349793e-18,
    1.9889573414486565e-31,
    4.8497112954016405e-55,
    4.120249125046154e-97,
    3.79381633561544e-172,
    4.6731107967074346e-306,
])

J0_X = np.array([
    0.001,
    0.0012648552168552957,
    0.0015998587196060573,
    0.0020235896477251575,
    0.002559547922699536,
    0.0032374575428176433,
    0.004094915062380427,
    0.005179474679231213,
    0.006551285568595509,
    0.008286427728546842,
    0.010481131341546858,
    0.013257113655901095,
    0.016768329368110083,
    0.021209508879201904,
    0.02682695795279726,
    0.03393221771895329,
    0.04291934260128778,
    0.054286754393238594,
    0.06866488450043001,
    0.08685113737513529,
    0.10985411419875583,
    0.13894954943731375,
    0.1757510624854793,
    0.22229964825261955,
    0.28117686979742307,
    0.35564803062231287,
    0.44984326689694437,
    0.5689866029018299,
    0.7196856730011522,
    0.9102981779915218,
    1.151395399326448,
    1.4563484775012443,
    1.8420699693267164,
    2.329951810515372,
    2.9470517025518097,
    3.7275937203149416,
    4.714866363457395,
    5.963623316594642,
    7.543120063354623,
    9.540954763499943,
    12.067926406393289,
    15.264179671752334,
    19.306977288832496,
    24.420530945486497,
    30.88843596477485,
    39.06939937054621,
    49.417133613238384,
    62.50551925273976,
    79.06043210907701,
    100.0,
    2.404825557695773,
    55.0,
])

J0_VALUES = np.array([
    0.9999997500000156,
    0.99999960003536,
    0.9999993601131217,
    0.9999989762714964,
    0.9999983621792785,
    0.999997379718881,
    0.9999958079220513,
    0.9999932932717569,
    0.999989270193132,
    0.9999828338525445,
    0.9999725366600111,
    0.9999560627170081,
    0.9999297070178602,
    0.999887542345095,
    0.9998200866745172,
    0.999712171863746,
    0.9995395355240456,
    0.9992633727681556,
    0.9988216307068484,
    0.9981151088394684,
    0.9969852931802332,
    0.9951790769202863,
    0.9922927859657726,
    0.9876838213385634,
    0.9803323426272232,
    0.968627720943049,
    0.950046504094327,
    0.9206865849355652,
    0.8746450227843945,
    0.8033244101282628,
    0.6950426707056957,
    0.536043614290872,
    0.3155121387783138,
    0.03945160587405349,
    -0.24158088849107773,
    -0.4005583795115826,
    -0.26515884379178734,
    0.14045214515880156,
    0.26027914269172775,
    -0.20035487474984662,
    0.06270306687088585,
    -0.06682393719791584,
    0.17149655268803685,
    0.010981480426749643,
    0.03605273468604842,
    0.1066518615314944,
    -0.00742653101558068,
    0.04453728086947638,
    -0.08656930952755351,
    0.019985850304223122,
    -6.10876525973673e-17,
    -0.07454830264823682,
])

