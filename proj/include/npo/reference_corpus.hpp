#pragma once

// Generated from data/reference_corpus.csv. Do not edit by hand; the
// checksum below is verified on every load.

#include <cstdint>
#include <string_view>

namespace npo {

inline constexpr std::uint64_t kEmbeddedCorpusChecksum = 0x8073a4fa95e7bac8ULL;

inline constexpr std::string_view kEmbeddedCorpus = R"CSV(table,g,lambda,nr,l,value,digits,rmax,exact
I,0.1,-0.46,0,0,2.4,13,150,1
I,0.1,-0.5,0,1,4,13,150,1
I,1,-10,0,0,-3,12,150,1
I,0.01,-0.041,0,1,4.9,13,150,1
I,10,-640,0,0,-57,12,150,1
I,0.1,-0.54,0,2,5.6,13,150,1
I,1,-18,0,2,-7,12,150,1
I,10,-1440,0,2,-133,12,150,1
II,0.1,0.1,0,0,3.120081864016,12,150,0
II,0.1,0.1,1,0,7.231009980656,12,150,0
II,0.1,0.1,0,1,5.186373002931,12,150,0
II,0.1,0.1,1,1,9.276541985488,12,150,0
II,0.1,0.1,0,2,7.2439618404219,13,150,0
II,0.1,0.1,1,2,11.317997742355,12,150,0
II,0.1,0.1,0,3,9.294359110874,12,150,0
II,0.1,0.1,1,3,13.355727291254,12,150,0
II,1,1,0,0,3.507388348905,12,150,0
II,1,1,1,0,7.648201241719,12,150,0
II,1,1,0,1,5.651393306756,12,150,0
II,1,1,1,1,9.713754138848,12,150,0
II,1,1,0,2,7.734828038042,12,150,0
II,1,1,1,2,11.76582837889,11,150,0
II,1,1,0,3,9.787669778003,12,150,0
II,1,1,1,3,13.804700633187,12,150,0
II,100,100,0,0,3.983098339488,12,150,0
II,100,100,1,0,7.984443523273,12,150,0
II,100,100,0,1,5.993438790399,12,150,0
II,100,100,1,1,9.993516159965,12,150,0
II,100,100,0,2,7.996024670900,12,150,0
II,100,100,1,2,11.996039234884,12,150,0
II,100,100,0,3,9.997153638476,12,150,0
II,100,100,1,3,13.99715862578,11,150,0
III,0.1,200,0,10,311.860880892760,12,300,0
III,0.1,200,1,10,361.308788624591,12,300,0
III,0.1,200,2,10,409.563564997653,12,300,0
III,0.1,200,3,10,456.909323126874,12,300,0
III,0.1,200,4,10,503.090316800161,12,300,0
III,0.2,1000,0,10,699.105622574512,12,300,0
III,0.2,1000,1,10,811.026062535266,12,300,0
III,0.2,1000,2,10,920.708010354176,12,300,0
III,0.2,1000,3,10,1028.176013499333,12,300,0
III,0.2,1000,4,10,1135.454829499741,12,300,0
III,0.5,500,0,20,914.366310994354,12,300,0
III,0.5,500,1,20,990.80662152100,11,300,0
III,0.5,500,2,20,1066.14830339382,11,300,0
III,0.5,500,3,20,1140.40019428154,11,300,0
III,0.5,500,4,20,1213.57118403531,11,300,0
III,0.1,1000,0,20,1312.25167480938,11,300,0
III,0.1,1000,1,20,1425.58600163865,11,300,0
III,0.1,1000,2,20,1537.79045903952,11,300,0
III,0.1,1000,3,20,1648.87112288517,11,300,0
III,0.1,1000,4,20,1758.83409624488,11,300,0
IV,1000,0.1,0,0,3.00009981081,11,150,0
IV,1000,0.1,0,1,5.00009993345,11,150,0
IV,1000,0.1,1,0,7.00009981589,11,150,0
IV,1000,0.1,0,2,7.00009996001,11,150,0
IV,1000,0.1,1,1,9.00009993351,11,150,0
IV,1000,0.1,0,3,9.00009997141,11,150,0
IV,1000,0.1,2,0,11.0000998195,10,150,0
IV,1000,0.1,1,2,11.0000999599,10,150,0
IV,1000,0.1,0,4,11.0000999777,10,150,0
IV,1000,0.1,2,1,13.0000999335,10,150,0
IV,1000,0.1,1,3,13.0000999713,10,150,0
IV,1000,0.1,0,5,13.0000999817,10,150,0
IV,1000,0.1,4,1,21.0000999336,10,150,0
IV,1000,0.1,3,3,21.0000999712,10,150,0
IV,1000,0.1,2,5,21.0000999816,10,150,0
IV,1000,0.1,1,7,21.0000999864,10,150,0
IV,1000,0.1,0,9,21.0000999893,10,150,0
IV,10,1000,0,0,64.8250831107,10,150,0
IV,10,1000,0,1,89.1234516907,10,150,0
IV,10,1000,1,0,94.8759670627,10,150,0
IV,10,1000,0,2,100.703995819,9,150,0
IV,10,1000,1,1,101.225823801,9,150,0
IV,10,1000,0,3,105.507579307,9,150,0
IV,10,1000,2,0,103.184601259,9,150,0
IV,10,1000,1,2,105.945405717,9,150,0
IV,10,1000,0,4,108.527833520,9,150,0
IV,10,1000,2,1,106.763936963,9,150,0
IV,10,1000,1,3,109.683699997,9,150,0
IV,10,1000,0,5,111.060023667,9,150,0
IV,10,1000,4,1,115.948021680,9,150,0
IV,10,1000,3,3,117.926235639,9,150,0
IV,10,1000,2,5,119.098277713,9,150,0
IV,10,1000,1,7,119.632225052,9,150,0
IV,10,1000,0,9,119.930276951,9,150,0
IV,0.1,-1,0,0,1.5624896124,10,150,0
IV,0.1,-1,0,1,2.8620942889,10,150,0
IV,0.1,-1,0,2,4.2817900651,10,150,0
IV,0.1,-1,1,0,4.4940422546,10,150,0
IV,0.1,-1,0,3,5.7883629695,10,150,0
IV,0.1,-1,1,1,6.0427339658,10,150,0
IV,0.1,-1,0,4,7.3613625227,10,150,0
IV,0.1,-1,1,2,7.6312350478,10,150,0
IV,0.1,-1,2,0,7.7681684221,10,150,0
IV,0.1,-1,0,5,8.9870011416,10,150,0
IV,0.1,-1,1,3,9.2593659985,10,150,0
IV,0.1,-1,2,1,9.4398078008,10,150,0
IV,0.1,-1,0,9,15.851969149,9,150,0
IV,0.1,-1,1,7,16.091742759,9,150,0
IV,0.1,-1,2,5,16.309144680,9,150,0
IV,0.1,-1,3,3,16.483741176,9,150,0
IV,0.1,-1,4,1,16.592021371,9,150,0
IV,1,-100,0,0,-79.086464632,9,150,0
IV,1,-100,0,1,-78.861621366,9,150,0
IV,1,-100,0,2,-78.421433572,9,150,0
IV,1,-100,1,0,-75.296619703,9,150,0
IV,1,-100,0,3,-77.782769536,9,150,0
IV,1,-100,1,1,-75.063364459,9,150,0
IV,1,-100,0,4,-76.966703116,9,150,0
IV,1,-100,1,2,-74.608167024,9,150,0
IV,1,-100,2,0,-71.510476611,9,150,0
IV,1,-100,0,5,-75.995560432,9,150,0
IV,1,-100,1,3,-73.950607078,9,150,0
IV,1,-100,2,1,-71.267997180,9,150,0
IV,1,-100,0,9,-70.958113492,9,150,0
IV,1,-100,1,7,-69.765978162,9,150,0
IV,1,-100,2,5,-68.250662394,9,150,0
IV,1,-100,3,3,-66.287773320,9,150,0
IV,1,-100,4,1,-63.686362266,9,150,0
V,0.1,-0.1,1,2,0.014016,6,150,0
V,0.1,-0.1,2,3,0.018938,6,150,0
V,0.1,-0.1,3,4,0.021770,6,150,0
V,0.1,-0.1,4,4,0.010083,6,150,0
V,0.1,-0.1,5,5,0.023245,6,150,0
V,0.1,-0.1,6,5,0.014199,6,150,0
V,0.1,-0.1,7,6,0.023833,6,150,0
V,0.1,-0.1,8,6,0.016888,6,150,0
V,0.1,-0.1,9,6,0.007716,6,150,0
V,0.1,-0.1,10,7,0.023845,6,150,0
V,0.1,-0.1,11,7,0.018550,6,150,0
V,0.1,-0.1,12,7,0.011165,6,150,0
V,0.1,-1,1,2,0.212252,6,150,0
V,0.1,-1,2,3,0.254371,6,150,0
V,0.1,-1,3,4,0.269873,6,150,0
V,0.1,-1,4,4,0.136933,6,150,0
V,0.1,-1,5,5,0.272365,6,150,0
V,0.1,-1,6,5,0.180442,6,150,0
V,0.1,-1,7,6,0.268071,6,150,0
V,0.1,-1,8,6,0.203685,6,150,0
V,0.1,-1,9,6,0.098492,6,150,0
V,0.1,-1,10,7,0.260169,6,150,0
V,0.1,-1,11,7,0.214770,6,150,0
V,0.1,-1,12,7,0.136694,6,150,0
V,0.1,-10,1,2,3.008518,6,150,0
V,0.1,-10,2,3,2.828010,6,150,0
V,0.1,-10,3,4,2.657399,6,150,0
V,0.1,-10,4,4,2.976420,6,150,0
V,0.1,-10,5,5,2.497516,6,150,0
V,0.1,-10,6,5,2.786802,6,150,0
V,0.1,-10,7,6,2.348674,6,150,0
V,0.1,-10,8,6,2.609170,6,150,0
V,0.1,-10,9,6,2.940544,6,150,0
V,0.1,-10,10,7,2.210768,6,150,0
V,0.1,-10,11,7,2.444401,6,150,0
V,0.1,-10,12,7,2.740799,6,150,0
V,0.1,-100,1,2,3.727614,6,150,0
V,0.1,-100,2,3,3.683210,6,150,0
V,0.1,-100,3,4,3.638930,6,150,0
V,0.1,-100,4,4,3.727042,6,150,0
V,0.1,-100,5,5,3.594793,6,150,0
V,0.1,-100,6,5,3.682481,6,150,0
V,0.1,-100,7,6,3.550816,6,150,0
V,0.1,-100,8,6,3.638047,6,150,0
V,0.1,-100,9,6,3.726466,6,150,0
V,0.1,-100,10,7,3.507016,6,150,0
V,0.1,-100,11,7,3.593757,6,150,0
V,0.1,-100,12,7,3.681748,6,150,0
V,1,-100,1,2,3.124814,6,150,0
V,1,-100,2,3,2.719405,6,150,0
V,1,-100,3,4,2.358536,6,150,0
V,1,-100,4,4,3.097690,6,150,0
V,1,-100,5,5,2.044953,6,150,0
V,1,-100,6,5,2.682610,6,150,0
V,1,-100,7,6,1.776512,6,150,0
V,1,-100,8,6,2.317747,6,150,0
V,1,-100,9,6,3.068309,6,150,0
V,1,-100,10,7,1.548542,6,150,0
V,1,-100,11,7,2.004532,6,150,0
V,1,-100,12,7,2.643349,6,150,0
V,10,-100,1,2,0.528414,6,150,0
V,10,-100,2,3,0.252782,6,150,0
V,10,-100,3,4,0.142225,6,150,0
V,10,-100,4,4,0.446619,6,150,0
V,10,-100,5,5,0.089829,6,150,0
V,10,-100,6,5,0.232326,6,150,0
V,10,-100,7,6,0.061534,6,150,0
V,10,-100,8,6,0.135666,6,150,0
V,10,-100,9,6,0.384311,6,150,0
V,10,-100,10,7,0.044682,6,150,0
V,10,-100,11,7,0.087238,6,150,0
V,10,-100,12,7,0.214832,6,150,0
V,100,-100,1,2,0.011480,6,150,0
V,100,-100,2,3,0.003626,6,150,0
V,100,-100,3,4,0.001742,6,150,0
V,100,-100,4,4,0.010609,6,150,0
V,100,-100,5,5,0.001026,6,150,0
V,100,-100,6,5,0.003561,6,150,0
V,100,-100,7,6,0.000678,6,150,0
V,100,-100,8,6,0.001730,6,150,0
V,100,-100,9,6,0.009937,6,150,0
V,100,-100,10,7,0.000482,6,150,0
V,100,-100,11,7,0.001023,6,150,0
V,100,-100,12,7,0.003500,6,150,0
V,1000,-100,1,2,0.000144,6,150,0
V,1000,-100,2,3,0.000038,6,150,0
V,1000,-100,3,4,0.000018,6,150,0
V,1000,-100,4,4,0.000140,6,150,0
V,1000,-100,5,5,0.000010,6,150,0
V,1000,-100,6,5,0.000038,6,150,0
V,1000,-100,7,6,0.000001,6,150,0
V,1000,-100,8,6,0.000018,6,150,0
V,1000,-100,9,6,0.000137,6,150,0
V,1000,-100,10,7,0.000005,6,150,0
V,1000,-100,11,7,0.000010,6,150,0
V,1000,-100,12,7,0.000038,6,150,0
)CSV";

}  // namespace npo
