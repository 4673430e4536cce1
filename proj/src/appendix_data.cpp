#include "jue/density.hpp"

namespace jue {

// Tabulated exact densities, piece k on [k, k+1]: normalizer · factor · inner(c), where the
// factor is (c-shift)^power or (shift-c)^power and inner lists integer coefficients
// from the constant term up.

const std::vector<AppendixCase>& appendix_cases() {
    static const std::vector<AppendixCase> cases = {
        {0, 0, 2, "2", {
            {0, 3, false,
             "1"},
            {2, 3, true,
             "1"},
        }, -1},
        {0, 0, 3, "3/14", {
            {0, 8, false,
             "1"},
            {0, 0, false,
             "-927 4392 -8484 8568 -4830 1512 -252 24 -2"},
            {3, 8, true,
             "1"},
        }, -1},
        {0, 0, 4, "2/3003", {
            {0, 15, false,
             "1"},
            {0, 0, false,
             "292464 -2910240 13131720 -35497280 63969360 -80912832 73653580 -48674340 23268960 -7927920 "
             "1873872 -294840 29120 -1680 60 -3"},
            {0, 0, false,
             "-705916304 3031004640 -5910494520 6950332480 -5531176560 3179336160 -1381480100 470398500 "
             "-128700000 28428400 -4948944 644280 -58240 3360 -120 3"},
            {4, 15, true,
             "1"},
        }, -1},
        {0, 0, 5, "5/140229804", {
            {0, 24, false,
             "1"},
            {0, 0, false,
             "-179192775 3065085000 -24758793900 125530048600 -447845361810 1194550480200 -2470634081300 "
             "4055447662200 -5363308269495 5768661885360 -5072249298600 3651921075600 -2149736416100 "
             "1029946456560 -398517412920 123134189200 -29915282925 5598232200 -785367660 79695000 "
             "-5578650 253000 -6900 120 -4"},
            {0, 0, false,
             "2443806916000825 -17407730744067000 58223870087874900 -121528934511474600 "
             "177464649282553710 -192656070655587000 161304132700472300 -106665764409131400 "
             "56603181050415945 -24367026171730000 8573537591434200 -2479096272534000 592028782736300 "
             "-117507788504400 19589544660840 -2790376974000 347123925225 -38235839400 3673797820 "
             "-292215000 17798550 -759000 20700 -360 6"},
            {0, 0, false,
             "-59394510856327775 295689680026989000 -706068990841773900 1078975874367012600 "
             "-1187187920423969310 1002229415508043800 -674525363862958300 370693368908418600 "
             "-168820549421134545 64263112978594640 -20539021982760600 5522495132708400 "
             "-1250073382257700 238359873297840 -38343917872920 5220961534800 -604502001675 59676982200 "
             "-4991492660 345345000 -18861150 759000 -20700 360 -4"},
            {5, 24, true,
             "1"},
        }, -1},
        {1, 1, 2, "12/7", {
            {0, 5, false,
             "7 -7 1"},
            {2, 5, true,
             "-3 3 1"},
        }, -1},
        {1, 1, 3, "10/1001", {
            {0, 11, false,
             "91 -91 21 -1"},
            {0, 0, false,
             "-171420 1375332 -4905992 10248147 -13900887 12837825 -8237229 3683394 -1135134 234234 "
             "-30030 1638 182 -42 2"},
            {3, 11, false,
             "20 8 -12 -1"},
        }, -1},
        {1, 1, 4, "10/11685817", {
            {0, 19, false,
             "1771 -1771 506 -46 1"},
            {0, 0, false,
             "-1043516620 14974716720 -100537883820 419360473840 -1217086784606 2608364956736 "
             "-4275619068336 5478760790976 -5562236749476 4508152194128 -2926140998088 1520203490988 "
             "-629711399408 206513065528 -53064396088 10532925348 -1584694848 176051568 -13863388 703087 "
             "-12397 -1518 138 -3"},
            {0, 0, false,
             "-42989308742860 273722184690480 -812841418001580 1494846453598960 -1906147044797534 "
             "1787284754851904 -1274022686388144 702625814387904 -300901360559844 98489523542960 "
             "-23166032264760 2998895483220 319577156080 -309607140920 98921176376 -20825596836 "
             "3169389696 -352103136 27726776 -1411487 30107 1518 -138 3"},
            {4, 19, true,
             "95 -325 50 30 1"},
        }, 3},
        {1, 2, 2, "10/7", {
            {0, 5, false,
             "42 -84 54 -12 1"},
            {2, 7, true,
             "-2 2 1"},
        }, -1},
        {1, 2, 3, "5/2431", {
            {0, 11, false,
             "6188 -12376 9044 -2992 476 -34 1"},
            {0, 0, false,
             "-3254970 29971221 -124876832 311355748 -517823264 606448752 -514965360 321854676 "
             "-148864716 50803038 -12602304 2165800 -210392 -6188 5984 -952 68 -2"},
            {3, 14, true,
             "-10 -7 8 1"},
        }, -1},
        {1, 2, 4, "14/455746863", {
            {0, 19, false,
             "2072070 -4144140 3256110 -1291680 280800 -33930 2223 -72 1"},
            {0, 0, false,
             "-231837186488 3630982483332 -26784799138656 123695368658550 -400947964192620 "
             "969395892583950 -1813643235261000 2688680200441950 -3208489645818600 3114293148449340 "
             "-2475012726838080 1616404010663520 -868669502439960 383891999309100 -139176493635600 "
             "41224381129620 -9918848071080 1923619208940 -297557145600 36142228980 -3344913000 "
             "216087300 -5920200 -637650 101790 -6669 216 -3"},
            {0, 0, false,
             "-5722716024060344 42141647696842116 -146172645886501728 317470979938360950 "
             "-484028759772387180 550261669854516750 -483245113519139400 334653488151904350 "
             "-184373541679041000 80427656700697020 -26964761415134400 6258220890948000 -516681174695400 "
             "-348837579341100 219451115362320 -76541709247380 19460223006120 -3835663834860 "
             "595114291200 -72290674170 6702258420 -441942930 15715440 432900 -101790 6669 -216 3"},
            {4, 23, true,
             "58 -166 15 20 1"},
        }, -1},
    };
    return cases;
}

}  // namespace jue
