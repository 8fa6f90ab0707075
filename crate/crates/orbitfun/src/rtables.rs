//! Appendix tables: the matrices R determining |F_M| by residue class.
//! Row l, column i holds the bounded-box solution count d_li; see
//! [`crate::grids::generate_r`] for the defining equation.

pub(crate) const R_A: [&[u64]; 1] = [
    &[1],
];

pub(crate) const R_B: [&[u64]; 2] = [
    &[1, 1],
    &[2, 0],
];

pub(crate) const R_C: [&[u64]; 2] = [
    &[1, 1],
    &[2, 0],
];

pub(crate) const R_D: [&[u64]; 2] = [
    &[1, 6, 1],
    &[4, 4, 0],
];

pub(crate) const R_G2: [&[u64]; 6] = [
    &[1, 4, 1],
    &[1, 5, 0],
    &[2, 4, 0],
    &[3, 3, 0],
    &[4, 2, 0],
    &[5, 1, 0],
];

pub(crate) const R_F4: [&[u64]; 12] = [
    &[1, 84, 262, 84, 1],
    &[1, 100, 265, 66, 0],
    &[3, 121, 253, 55, 0],
    &[4, 139, 250, 39, 0],
    &[8, 160, 232, 32, 0],
    &[10, 181, 220, 21, 0],
    &[17, 199, 199, 17, 0],
    &[21, 220, 181, 10, 0],
    &[32, 232, 160, 8, 0],
    &[39, 250, 139, 4, 0],
    &[55, 253, 121, 3, 0],
    &[66, 265, 100, 1, 0],
];

pub(crate) const R_E6: [&[u64]; 6] = [
    &[1, 132, 839, 839, 132, 1],
    &[3, 210, 945, 708, 78, 0],
    &[9, 309, 1017, 567, 42, 0],
    &[20, 433, 1038, 433, 20, 0],
    &[42, 567, 1017, 309, 9, 0],
    &[78, 708, 945, 210, 3, 0],
];

pub(crate) const R_E7: [&[u64]; 12] = [
    &[1, 1011, 19029, 58150, 40371, 5775, 79],
    &[2, 1414, 22208, 59612, 36626, 4510, 44],
    &[6, 1944, 25585, 60536, 32856, 3464, 25],
    &[12, 2616, 29172, 60816, 29172, 2616, 12],
    &[25, 3464, 32856, 60536, 25585, 1944, 6],
    &[44, 4510, 36626, 59612, 22208, 1414, 2],
    &[79, 5775, 40371, 58150, 19029, 1011, 1],
    &[128, 7296, 44032, 56128, 16128, 704, 0],
    &[208, 9071, 47520, 53654, 13480, 483, 0],
    &[318, 11142, 50748, 50748, 11142, 318, 0],
    &[483, 13480, 53654, 47520, 9071, 208, 0],
    &[704, 16128, 56128, 44032, 7296, 128, 0],
];

pub(crate) const R_E8: [&[u64]; 60] = [
    &[1, 1366597, 143626378, 1624457989, 4240905745, 3094001119, 595138048, 20483167, 20956],
    &[1, 1520913, 151753498, 1668997388, 4262344515, 3044716089, 571669092, 18981162, 17342],
    &[3, 1691201, 160250557, 1714067554, 4282411955, 2995120797, 548866679, 17576888, 14366],
    &[5, 1876896, 169126731, 1759671908, 4301058735, 2945259720, 526733429, 16260804, 11772],
    &[10, 2081203, 178395851, 1805768016, 4318297175, 2895163955, 505251617, 15032514, 9659],
    &[15, 2303555, 188067805, 1852357250, 4334079150, 2844879535, 484421845, 13883020, 7825],
    &[27, 2547531, 198155859, 1899395763, 4348420650, 2794434993, 464226699, 12812121, 6357],
    &[39, 2812537, 208670852, 1946882187, 4361275710, 2743877271, 444664908, 11811413, 5083],
    &[63, 3102551, 219625367, 1994771439, 4372663930, 2693232237, 425719479, 10880853, 4081],
    &[90, 3416994, 231030959, 2043059877, 4382541090, 2642547860, 407387331, 10012581, 3218],
    &[135, 3760240, 242899625, 2091700825, 4390930975, 2591846890, 389652035, 9206725, 2550],
    &[187, 4131732, 255243637, 2140688264, 4397791365, 2541178068, 372508803, 8455968, 1976],
    &[270, 4536288, 268074057, 2189974725, 4403149365, 2490561450, 355941747, 7760553, 1545],
    &[364, 4973372, 281404062, 2239551147, 4406965785, 2440045746, 339944648, 7113703, 1173],
    &[505, 5448265, 295243652, 2289369513, 4409270855, 2389648355, 324502190, 6515763, 902],
    &[670, 5960475, 309606700, 2339418205, 4410027900, 2339418205, 309606700, 5960475, 670],
    &[902, 6515763, 324502190, 2389648355, 4409270855, 2289369513, 295243652, 5448265, 505],
    &[1173, 7113703, 339944648, 2440045746, 4406965785, 2239551147, 281404062, 4973372, 364],
    &[1545, 7760553, 355941747, 2490561450, 4403149365, 2189974725, 268074057, 4536288, 270],
    &[1976, 8455968, 372508803, 2541178068, 4397791365, 2140688264, 255243637, 4131732, 187],
    &[2550, 9206725, 389652035, 2591846890, 4390930975, 2091700825, 242899625, 3760240, 135],
    &[3218, 10012581, 407387331, 2642547860, 4382541090, 2043059877, 231030959, 3416994, 90],
    &[4081, 10880853, 425719479, 2693232237, 4372663930, 1994771439, 219625367, 3102551, 63],
    &[5083, 11811413, 444664908, 2743877271, 4361275710, 1946882187, 208670852, 2812537, 39],
    &[6357, 12812121, 464226699, 2794434993, 4348420650, 1899395763, 198155859, 2547531, 27],
    &[7825, 13883020, 484421845, 2844879535, 4334079150, 1852357250, 188067805, 2303555, 15],
    &[9659, 15032514, 505251617, 2895163955, 4318297175, 1805768016, 178395851, 2081203, 10],
    &[11772, 16260804, 526733429, 2945259720, 4301058735, 1759671908, 169126731, 1876896, 5],
    &[14366, 17576888, 548866679, 2995120797, 4282411955, 1714067554, 160250557, 1691201, 3],
    &[17342, 18981162, 571669092, 3044716089, 4262344515, 1668997388, 151753498, 1520913, 1],
    &[20956, 20483167, 595138048, 3094001119, 4240905745, 1624457989, 143626378, 1366597, 1],
    &[25080, 22083567, 619291548, 3142941905, 4218087760, 1580489625, 135855148, 1225367, 0],
    &[30031, 23792451, 644124828, 3191495835, 4193940775, 1537086969, 128431334, 1097777, 0],
    &[35667, 25610729, 669656034, 3239626500, 4168460735, 1494288513, 121340556, 981266, 0],
    &[42357, 27549093, 695878165, 3287293110, 4141699055, 1452086633, 114575247, 876340, 0],
    &[49945, 29608720, 722809435, 3334456900, 4113655575, 1410517880, 108120805, 780740, 0],
    &[58881, 31800825, 750440529, 3381079470, 4084381995, 1369573029, 101970315, 694956, 0],
    &[68970, 34126983, 778789517, 3427119670, 4053882540, 1329286075, 96109277, 616968, 0],
    &[80756, 36598901, 807844733, 3472541685, 4022208950, 1289646319, 90531409, 547247, 0],
    &[94028, 39218481, 837624096, 3517302275, 3989369340, 1250685567, 85222184, 484029, 0],
    &[109410, 41998015, 868113375, 3561368375, 3955415600, 1212391365, 80176135, 427725, 0],
    &[126672, 44939778, 899330175, 3604694885, 3920359630, 1174793268, 75378787, 376805, 0],
    &[146559, 48056490, 931257831, 3647251755, 3884252805, 1137877656, 70825245, 331659, 0],
    &[168795, 51350948, 963913357, 3688992120, 3847111165, 1101671300, 66501387, 290928, 0],
    &[194259, 54836274, 997277587, 3729889215, 3808985225, 1066159616, 62402841, 254983, 0],
    &[222655, 58515700, 1031366970, 3769894675, 3769894675, 1031366970, 58515700, 222655, 0],
    &[254983, 62402841, 1066159616, 3808985225, 3729889215, 997277587, 54836274, 194259, 0],
    &[290928, 66501387, 1101671300, 3847111165, 3688992120, 963913357, 51350948, 168795, 0],
    &[331659, 70825245, 1137877656, 3884252805, 3647251755, 931257831, 48056490, 146559, 0],
    &[376805, 75378787, 1174793268, 3920359630, 3604694885, 899330175, 44939778, 126672, 0],
    &[427725, 80176135, 1212391365, 3955415600, 3561368375, 868113375, 41998015, 109410, 0],
    &[484029, 85222184, 1250685567, 3989369340, 3517302275, 837624096, 39218481, 94028, 0],
    &[547247, 90531409, 1289646319, 4022208950, 3472541685, 807844733, 36598901, 80756, 0],
    &[616968, 96109277, 1329286075, 4053882540, 3427119670, 778789517, 34126983, 68970, 0],
    &[694956, 101970315, 1369573029, 4084381995, 3381079470, 750440529, 31800825, 58881, 0],
    &[780740, 108120805, 1410517880, 4113655575, 3334456900, 722809435, 29608720, 49945, 0],
    &[876340, 114575247, 1452086633, 4141699055, 3287293110, 695878165, 27549093, 42357, 0],
    &[981266, 121340556, 1494288513, 4168460735, 3239626500, 669656034, 25610729, 35667, 0],
    &[1097777, 128431334, 1537086969, 4193940775, 3191495835, 644124828, 23792451, 30031, 0],
    &[1225367, 135855148, 1580489625, 4218087760, 3142941905, 619291548, 22083567, 25080, 0],
];

