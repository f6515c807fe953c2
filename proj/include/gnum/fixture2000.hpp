// Generated by scripts/make_fixture.py -- do not edit.
// Frozen group counts for every supported order shape, n <= 2000.
#pragma once

#include <cstdint>
#include <utility>

namespace gnum {

inline constexpr std::pair<std::uint64_t, std::uint64_t> kGnuFixture2000[] = {
    {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 5},
    {9, 2}, {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {17, 1},
    {18, 5}, {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {25, 2}, {26, 2},
    {27, 5}, {28, 4}, {29, 1}, {30, 4}, {31, 1}, {33, 1}, {34, 2}, {35, 1},
    {37, 1}, {38, 2}, {39, 2}, {41, 1}, {42, 6}, {43, 1}, {44, 4}, {45, 2},
    {46, 2}, {47, 1}, {49, 2}, {50, 5}, {51, 1}, {52, 5}, {53, 1}, {55, 2},
    {57, 2}, {58, 2}, {59, 1}, {61, 1}, {62, 2}, {63, 4}, {65, 1}, {66, 4},
    {67, 1}, {68, 5}, {69, 1}, {70, 4}, {71, 1}, {73, 1}, {74, 2}, {75, 3},
    {76, 4}, {77, 1}, {78, 6}, {79, 1}, {82, 2}, {83, 1}, {85, 1}, {86, 2},
    {87, 1}, {89, 1}, {91, 1}, {92, 4}, {93, 2}, {94, 2}, {95, 1}, {97, 1},
    {98, 5}, {99, 2}, {101, 1}, {102, 4}, {103, 1}, {105, 2}, {106, 2}, {107, 1},
    {109, 1}, {110, 6}, {111, 2}, {113, 1}, {114, 6}, {115, 1}, {116, 5}, {117, 4},
    {118, 2}, {119, 1}, {121, 2}, {122, 2}, {123, 1}, {124, 4}, {125, 5}, {127, 1},
    {129, 2}, {130, 4}, {131, 1}, {133, 1}, {134, 2}, {137, 1}, {138, 4}, {139, 1},
    {141, 1}, {142, 2}, {143, 1}, {145, 1}, {146, 2}, {147, 6}, {148, 5}, {149, 1},
    {151, 1}, {153, 2}, {154, 4}, {155, 2}, {157, 1}, {158, 2}, {159, 1}, {161, 1},
    {163, 1}, {164, 5}, {165, 2}, {166, 2}, {167, 1}, {169, 2}, {170, 4}, {171, 5},
    {172, 4}, {173, 1}, {174, 4}, {175, 2}, {177, 1}, {178, 2}, {179, 1}, {181, 1},
    {182, 4}, {183, 2}, {185, 1}, {186, 6}, {187, 1}, {188, 4}, {190, 4}, {191, 1},
    {193, 1}, {194, 2}, {195, 2}, {197, 1}, {199, 1}, {201, 2}, {202, 2}, {203, 2},
    {205, 2}, {206, 2}, {207, 2}, {209, 1}, {210, 12}, {211, 1}, {212, 5}, {213, 1},
    {214, 2}, {215, 1}, {217, 1}, {218, 2}, {219, 2}, {221, 1}, {222, 6}, {223, 1},
    {226, 2}, {227, 1}, {229, 1}, {230, 4}, {231, 2}, {233, 1}, {235, 1}, {236, 4},
    {237, 2}, {238, 4}, {239, 1}, {241, 1}, {242, 5}, {244, 5}, {245, 2}, {246, 4},
    {247, 1}, {249, 1}, {251, 1}, {253, 2}, {254, 2}, {255, 1}, {257, 1}, {258, 6},
    {259, 1}, {261, 2}, {262, 2}, {263, 1}, {265, 1}, {266, 4}, {267, 1}, {268, 4},
    {269, 1}, {271, 1}, {273, 5}, {274, 2}, {275, 4}, {277, 1}, {278, 2}, {279, 4},
    {281, 1}, {282, 4}, {283, 1}, {284, 4}, {285, 2}, {286, 4}, {287, 1}, {289, 2},
    {290, 4}, {291, 2}, {292, 5}, {293, 1}, {295, 1}, {298, 2}, {299, 1}, {301, 2},
    {302, 2}, {303, 1}, {305, 2}, {307, 1}, {309, 2}, {310, 6}, {311, 1}, {313, 1},
    {314, 2}, {316, 4}, {317, 1}, {318, 4}, {319, 1}, {321, 1}, {322, 4}, {323, 1},
    {325, 2}, {326, 2}, {327, 2}, {329, 1}, {330, 12}, {331, 1}, {332, 4}, {333, 5},
    {334, 2}, {335, 1}, {337, 1}, {338, 5}, {339, 1}, {341, 1}, {343, 5}, {345, 1},
    {346, 2}, {347, 1}, {349, 1}, {353, 1}, {354, 4}, {355, 2}, {356, 5}, {357, 2},
    {358, 2}, {359, 1}, {361, 2}, {362, 2}, {363, 3}, {365, 1}, {366, 6}, {367, 1},
    {369, 2}, {370, 4}, {371, 1}, {373, 1}, {374, 4}, {377, 1}, {379, 1}, {381, 2},
    {382, 2}, {383, 1}, {385, 2}, {386, 2}, {387, 4}, {388, 5}, {389, 1}, {390, 12},
    {391, 1}, {393, 1}, {394, 2}, {395, 1}, {397, 1}, {398, 2}, {399, 5}, {401, 1},
    {402, 6}, {403, 1}, {404, 5}, {406, 6}, {407, 1}, {409, 1}, {410, 6}, {411, 1},
    {412, 4}, {413, 1}, {415, 1}, {417, 2}, {418, 4}, {419, 1}, {421, 1}, {422, 2},
    {423, 2}, {425, 2}, {426, 4}, {427, 1}, {428, 4}, {429, 2}, {430, 4}, {431, 1},
    {433, 1}, {434, 4}, {435, 1}, {436, 5}, {437, 1}, {438, 6}, {439, 1}, {442, 4},
    {443, 1}, {445, 1}, {446, 2}, {447, 1}, {449, 1}, {451, 1}, {452, 5}, {453, 2},
    {454, 2}, {455, 1}, {457, 1}, {458, 2}, {461, 1}, {462, 12}, {463, 1}, {465, 4},
    {466, 2}, {467, 1}, {469, 1}, {470, 4}, {471, 2}, {473, 1}, {474, 6}, {475, 2},
    {477, 2}, {478, 2}, {479, 1}, {481, 1}, {482, 2}, {483, 2}, {485, 1}, {487, 1},
    {489, 2}, {491, 1}, {493, 1}, {494, 4}, {497, 2}, {498, 4}, {499, 1}, {501, 1},
    {502, 2}, {503, 1}, {505, 2}, {506, 6}, {507, 6}, {508, 4}, {509, 1}, {510, 8},
    {511, 1}, {514, 2}, {515, 1}, {517, 1}, {518, 4}, {519, 1}, {521, 1}, {523, 1},
    {524, 4}, {526, 2}, {527, 1}, {529, 2}, {530, 4}, {531, 2}, {533, 1}, {534, 4},
    {535, 1}, {537, 1}, {538, 2}, {539, 2}, {541, 1}, {542, 2}, {543, 2}, {545, 1},
    {546, 24}, {547, 1}, {548, 5}, {549, 4}, {551, 1}, {553, 1}, {554, 2}, {555, 2},
    {556, 4}, {557, 1}, {559, 1}, {561, 1}, {562, 2}, {563, 1}, {565, 1}, {566, 2},
    {569, 1}, {570, 12}, {571, 1}, {573, 1}, {574, 4}, {575, 2}, {577, 1}, {578, 5},
    {579, 2}, {581, 1}, {582, 6}, {583, 1}, {586, 2}, {587, 1}, {589, 1}, {590, 4},
    {591, 1}, {593, 1}, {595, 1}, {596, 5}, {597, 2}, {598, 4}, {599, 1}, {601, 1},
    {602, 6}, {603, 4}, {604, 4}, {605, 7}, {606, 4}, {607, 1}, {609, 3}, {610, 6},
    {611, 1}, {613, 1}, {614, 2}, {615, 2}, {617, 1}, {618, 6}, {619, 1}, {622, 2},
    {623, 1}, {626, 2}, {627, 2}, {628, 5}, {629, 1}, {631, 1}, {633, 2}, {634, 2},
    {635, 1}, {637, 2}, {638, 4}, {639, 2}, {641, 1}, {642, 4}, {643, 1}, {645, 2},
    {646, 4}, {647, 1}, {649, 1}, {651, 5}, {652, 4}, {653, 1}, {654, 6}, {655, 2},
    {657, 5}, {658, 4}, {659, 1}, {661, 1}, {662, 2}, {663, 2}, {665, 1}, {667, 1},
    {668, 4}, {669, 2}, {670, 4}, {671, 1}, {673, 1}, {674, 2}, {677, 1}, {678, 4},
    {679, 1}, {681, 1}, {682, 4}, {683, 1}, {685, 1}, {687, 2}, {689, 2}, {690, 8},
    {691, 1}, {692, 5}, {694, 2}, {695, 1}, {697, 1}, {698, 2}, {699, 1}, {701, 1},
    {703, 1}, {705, 1}, {706, 2}, {707, 1}, {709, 1}, {710, 6}, {711, 4}, {713, 1},
    {714, 12}, {715, 2}, {716, 4}, {717, 1}, {718, 2}, {719, 1}, {721, 1}, {722, 5},
    {723, 2}, {724, 5}, {725, 2}, {727, 1}, {730, 4}, {731, 1}, {733, 1}, {734, 2},
    {737, 2}, {739, 1}, {741, 5}, {742, 4}, {743, 1}, {745, 1}, {746, 2}, {747, 2},
    {749, 1}, {751, 1}, {753, 1}, {754, 4}, {755, 2}, {757, 1}, {758, 2}, {759, 2},
    {761, 1}, {762, 6}, {763, 1}, {764, 4}, {765, 2}, {766, 2}, {767, 1}, {769, 1},
    {770, 12}, {771, 1}, {772, 5}, {773, 1}, {775, 4}, {777, 5}, {778, 2}, {779, 1},
    {781, 1}, {782, 4}, {785, 1}, {786, 4}, {787, 1}, {788, 5}, {789, 1}, {790, 4},
    {791, 2}, {793, 1}, {794, 2}, {795, 1}, {796, 4}, {797, 1}, {798, 24}, {799, 1},
    {801, 2}, {802, 2}, {803, 1}, {805, 1}, {806, 4}, {807, 1}, {809, 1}, {811, 1},
    {813, 2}, {814, 4}, {815, 1}, {817, 1}, {818, 2}, {821, 1}, {822, 4}, {823, 1},
    {826, 4}, {827, 1}, {829, 1}, {830, 4}, {831, 2}, {833, 2}, {834, 6}, {835, 1},
    {838, 2}, {839, 1}, {841, 2}, {842, 2}, {843, 1}, {844, 4}, {845, 2}, {847, 2},
    {849, 2}, {851, 1}, {853, 1}, {854, 4}, {857, 1}, {858, 12}, {859, 1}, {861, 2},
    {862, 2}, {863, 1}, {865, 1}, {866, 2}, {867, 3}, {869, 1}, {870, 8}, {871, 1},
    {873, 4}, {874, 4}, {877, 1}, {878, 2}, {879, 1}, {881, 1}, {883, 1}, {885, 1},
    {886, 2}, {887, 1}, {889, 2}, {890, 4}, {892, 4}, {893, 1}, {894, 4}, {895, 1},
    {897, 2}, {898, 2}, {899, 1}, {901, 1}, {902, 4}, {903, 7}, {905, 2}, {906, 6},
    {907, 1}, {908, 4}, {909, 2}, {910, 8}, {911, 1}, {913, 1}, {914, 2}, {915, 4},
    {916, 5}, {917, 1}, {919, 1}, {921, 2}, {922, 2}, {923, 1}, {925, 2}, {926, 2},
    {927, 4}, {929, 1}, {930, 18}, {931, 2}, {932, 5}, {933, 1}, {934, 2}, {935, 2},
    {937, 1}, {938, 4}, {939, 2}, {941, 1}, {942, 6}, {943, 1}, {946, 4}, {947, 1},
    {949, 1}, {951, 1}, {953, 1}, {955, 2}, {956, 4}, {957, 1}, {958, 2}, {959, 1},
    {961, 2}, {962, 4}, {963, 2}, {964, 5}, {965, 1}, {966, 12}, {967, 1}, {969, 2},
    {970, 4}, {971, 1}, {973, 1}, {974, 2}, {977, 1}, {978, 6}, {979, 2}, {981, 5},
    {982, 2}, {983, 1}, {985, 1}, {986, 4}, {987, 2}, {989, 1}, {991, 1}, {993, 2},
    {994, 6}, {995, 1}, {997, 1}, {998, 2}, {1001, 1}, {1002, 4}, {1003, 1}, {1004, 4},
    {1005, 2}, {1006, 2}, {1007, 1}, {1009, 1}, {1010, 6}, {1011, 2}, {1013, 1}, {1015, 2},
    {1017, 2}, {1018, 2}, {1019, 1}, {1021, 1}, {1022, 4}, {1023, 2}, {1025, 4}, {1027, 2},
    {1028, 5}, {1030, 4}, {1031, 1}, {1033, 1}, {1034, 4}, {1035, 2}, {1037, 1}, {1038, 4},
    {1039, 1}, {1041, 1}, {1042, 2}, {1043, 1}, {1045, 2}, {1046, 2}, {1047, 2}, {1049, 1},
    {1051, 1}, {1052, 4}, {1054, 4}, {1055, 2}, {1057, 1}, {1058, 5}, {1059, 1}, {1061, 1},
    {1063, 1}, {1065, 2}, {1066, 4}, {1067, 1}, {1069, 1}, {1070, 4}, {1073, 1}, {1074, 4},
    {1075, 2}, {1076, 5}, {1077, 1}, {1079, 1}, {1081, 2}, {1082, 2}, {1083, 6}, {1084, 4},
    {1085, 2}, {1086, 6}, {1087, 1}, {1090, 4}, {1091, 1}, {1093, 1}, {1094, 2}, {1095, 2},
    {1097, 1}, {1099, 1}, {1101, 2}, {1102, 4}, {1103, 1}, {1105, 1}, {1106, 4}, {1108, 5},
    {1109, 1}, {1110, 12}, {1111, 1}, {1113, 2}, {1114, 2}, {1115, 1}, {1117, 1}, {1118, 4},
    {1119, 2}, {1121, 1}, {1122, 8}, {1123, 1}, {1124, 5}, {1126, 2}, {1127, 2}, {1129, 1},
    {1130, 4}, {1131, 2}, {1132, 4}, {1133, 1}, {1135, 1}, {1137, 2}, {1138, 2}, {1139, 1},
    {1141, 1}, {1142, 2}, {1143, 5}, {1145, 1}, {1146, 4}, {1147, 1}, {1149, 1}, {1151, 1},
    {1153, 1}, {1154, 2}, {1155, 4}, {1157, 1}, {1158, 6}, {1159, 1}, {1162, 4}, {1163, 1},
    {1165, 1}, {1166, 4}, {1167, 1}, {1169, 1}, {1171, 1}, {1172, 5}, {1173, 1}, {1174, 2},
    {1175, 2}, {1177, 1}, {1178, 4}, {1179, 2}, {1181, 1}, {1182, 4}, {1183, 3}, {1185, 2},
    {1186, 2}, {1187, 1}, {1189, 1}, {1190, 8}, {1191, 2}, {1193, 1}, {1194, 6}, {1195, 1},
    {1198, 2}, {1199, 1}, {1201, 1}, {1202, 2}, {1203, 1}, {1205, 2}, {1207, 1}, {1209, 5},
    {1211, 1}, {1213, 1}, {1214, 2}, {1217, 1}, {1218, 16}, {1219, 1}, {1221, 2}, {1222, 4},
    {1223, 1}, {1226, 2}, {1227, 2}, {1228, 4}, {1229, 1}, {1230, 12}, {1231, 1}, {1233, 2},
    {1234, 2}, {1235, 1}, {1237, 1}, {1238, 2}, {1239, 2}, {1241, 1}, {1243, 1}, {1244, 4},
    {1245, 1}, {1246, 4}, {1247, 1}, {1249, 1}, {1251, 4}, {1252, 5}, {1253, 1}, {1254, 12},
    {1255, 2}, {1257, 1}, {1258, 4}, {1259, 1}, {1261, 1}, {1262, 2}, {1263, 2}, {1265, 3},
    {1266, 6}, {1267, 1}, {1268, 5}, {1270, 4}, {1271, 1}, {1273, 1}, {1275, 3}, {1277, 1},
    {1279, 1}, {1281, 5}, {1282, 2}, {1283, 1}, {1285, 1}, {1286, 2}, {1289, 1}, {1290, 12},
    {1291, 1}, {1293, 1}, {1294, 2}, {1295, 1}, {1297, 1}, {1298, 4}, {1299, 2}, {1301, 1},
    {1302, 24}, {1303, 1}, {1305, 2}, {1306, 2}, {1307, 1}, {1309, 1}, {1310, 6}, {1311, 2},
    {1313, 1}, {1315, 1}, {1317, 2}, {1318, 2}, {1319, 1}, {1321, 1}, {1322, 2}, {1324, 4},
    {1325, 2}, {1326, 12}, {1327, 1}, {1329, 1}, {1330, 8}, {1331, 5}, {1333, 1}, {1334, 4},
    {1335, 1}, {1337, 1}, {1338, 6}, {1339, 1}, {1341, 2}, {1342, 4}, {1343, 1}, {1345, 1},
    {1346, 2}, {1347, 1}, {1348, 5}, {1349, 1}, {1351, 1}, {1353, 1}, {1354, 2}, {1355, 2},
    {1357, 1}, {1358, 4}, {1359, 4}, {1361, 1}, {1362, 4}, {1363, 1}, {1365, 5}, {1366, 2},
    {1367, 1}, {1369, 2}, {1370, 4}, {1371, 2}, {1373, 1}, {1374, 6}, {1378, 6}, {1379, 2},
    {1381, 1}, {1382, 2}, {1383, 1}, {1385, 1}, {1387, 1}, {1388, 4}, {1389, 2}, {1390, 4},
    {1391, 1}, {1393, 1}, {1394, 4}, {1396, 5}, {1397, 1}, {1398, 4}, {1399, 1}, {1401, 1},
    {1402, 2}, {1403, 1}, {1405, 2}, {1406, 4}, {1407, 5}, {1409, 1}, {1410, 8}, {1411, 1},
    {1412, 5}, {1413, 4}, {1414, 4}, {1415, 1}, {1417, 1}, {1418, 2}, {1419, 2}, {1421, 4},
    {1423, 1}, {1426, 4}, {1427, 1}, {1429, 1}, {1430, 12}, {1433, 1}, {1434, 4}, {1435, 2},
    {1436, 4}, {1437, 1}, {1438, 2}, {1439, 1}, {1441, 1}, {1442, 4}, {1443, 5}, {1445, 2},
    {1446, 6}, {1447, 1}, {1451, 1}, {1453, 1}, {1454, 2}, {1455, 2}, {1457, 1}, {1459, 1},
    {1461, 2}, {1462, 4}, {1463, 1}, {1465, 1}, {1466, 2}, {1467, 5}, {1468, 4}, {1469, 1},
    {1471, 1}, {1473, 1}, {1474, 6}, {1475, 2}, {1477, 2}, {1478, 2}, {1479, 1}, {1481, 1},
    {1482, 24}, {1483, 1}, {1486, 2}, {1487, 1}, {1489, 1}, {1490, 4}, {1491, 3}, {1492, 5},
    {1493, 1}, {1495, 1}, {1497, 2}, {1498, 4}, {1499, 1}, {1501, 1}, {1502, 2}, {1503, 2},
    {1505, 2}, {1506, 4}, {1507, 1}, {1509, 1}, {1510, 6}, {1511, 1}, {1513, 1}, {1514, 2},
    {1515, 2}, {1516, 4}, {1517, 1}, {1518, 12}, {1519, 2}, {1522, 2}, {1523, 1}, {1525, 4},
    {1526, 4}, {1527, 1}, {1529, 1}, {1531, 1}, {1532, 4}, {1533, 5}, {1534, 4}, {1535, 1},
    {1537, 1}, {1538, 2}, {1541, 1}, {1542, 4}, {1543, 1}, {1545, 2}, {1546, 2}, {1547, 1},
    {1549, 1}, {1551, 1}, {1553, 1}, {1554, 24}, {1555, 2}, {1556, 5}, {1557, 2}, {1558, 4},
    {1559, 1}, {1561, 1}, {1562, 4}, {1563, 1}, {1565, 1}, {1567, 1}, {1569, 2}, {1570, 4},
    {1571, 1}, {1573, 2}, {1574, 2}, {1577, 1}, {1578, 4}, {1579, 1}, {1581, 2}, {1582, 6},
    {1583, 1}, {1585, 1}, {1586, 4}, {1587, 3}, {1588, 5}, {1589, 1}, {1590, 8}, {1591, 1},
    {1594, 2}, {1595, 2}, {1597, 1}, {1598, 4}, {1599, 2}, {1601, 1}, {1603, 1}, {1604, 5},
    {1605, 1}, {1606, 4}, {1607, 1}, {1609, 1}, {1610, 8}, {1611, 2}, {1613, 1}, {1614, 4},
    {1615, 1}, {1618, 2}, {1619, 1}, {1621, 1}, {1622, 2}, {1623, 2}, {1626, 6}, {1627, 1},
    {1629, 5}, {1630, 4}, {1631, 1}, {1633, 1}, {1634, 4}, {1635, 2}, {1636, 5}, {1637, 1},
    {1639, 1}, {1641, 2}, {1642, 2}, {1643, 1}, {1645, 1}, {1646, 2}, {1649, 1}, {1651, 1},
    {1653, 2}, {1654, 2}, {1655, 2}, {1657, 1}, {1658, 2}, {1659, 5}, {1661, 1}, {1662, 6},
    {1663, 1}, {1667, 1}, {1669, 1}, {1670, 4}, {1671, 1}, {1673, 2}, {1675, 2}, {1676, 4},
    {1677, 5}, {1678, 2}, {1679, 1}, {1681, 2}, {1682, 5}, {1683, 2}, {1684, 5}, {1685, 1},
    {1686, 4}, {1687, 1}, {1689, 1}, {1691, 1}, {1693, 1}, {1695, 1}, {1697, 1}, {1698, 6},
    {1699, 1}, {1702, 4}, {1703, 2}, {1705, 7}, {1706, 2}, {1707, 1}, {1709, 1}, {1711, 2},
    {1713, 2}, {1714, 2}, {1717, 1}, {1718, 2}, {1719, 2}, {1721, 1}, {1722, 12}, {1723, 1},
    {1724, 4}, {1725, 3}, {1726, 2}, {1727, 1}, {1729, 1}, {1730, 4}, {1731, 2}, {1732, 5},
    {1733, 1}, {1735, 1}, {1737, 4}, {1738, 4}, {1739, 1}, {1741, 1}, {1742, 4}, {1743, 2},
    {1745, 1}, {1747, 1}, {1749, 1}, {1751, 2}, {1753, 1}, {1754, 2}, {1756, 4}, {1757, 1},
    {1758, 4}, {1759, 1}, {1761, 1}, {1762, 2}, {1763, 1}, {1765, 1}, {1766, 2}, {1767, 5},
    {1769, 1}, {1770, 8}, {1771, 2}, {1772, 4}, {1773, 2}, {1774, 2}, {1775, 4}, {1777, 1},
    {1778, 6}, {1779, 1}, {1781, 1}, {1783, 1}, {1785, 2}, {1786, 4}, {1787, 1}, {1789, 1},
    {1790, 4}, {1791, 5}, {1793, 1}, {1794, 12}, {1795, 1}, {1796, 5}, {1797, 1}, {1798, 4},
    {1799, 1}, {1801, 1}, {1802, 4}, {1803, 2}, {1805, 3}, {1806, 30}, {1807, 1}, {1810, 6},
    {1811, 1}, {1813, 2}, {1814, 2}, {1817, 1}, {1819, 1}, {1821, 2}, {1822, 2}, {1823, 1},
    {1825, 2}, {1826, 4}, {1828, 5}, {1829, 1}, {1830, 18}, {1831, 1}, {1833, 2}, {1834, 4},
    {1835, 1}, {1837, 1}, {1838, 2}, {1839, 2}, {1841, 1}, {1842, 6}, {1843, 1}, {1844, 5},
    {1846, 4}, {1847, 1}, {1849, 2}, {1851, 1}, {1852, 4}, {1853, 1}, {1855, 1}, {1857, 2},
    {1858, 2}, {1859, 2}, {1861, 1}, {1865, 1}, {1866, 4}, {1867, 1}, {1868, 4}, {1869, 2},
    {1870, 12}, {1871, 1}, {1873, 1}, {1874, 2}, {1877, 1}, {1878, 6}, {1879, 1}, {1882, 2},
    {1883, 1}, {1885, 1}, {1886, 4}, {1887, 2}, {1889, 1}, {1891, 1}, {1893, 2}, {1894, 2},
    {1895, 1}, {1897, 1}, {1898, 4}, {1899, 4}, {1901, 1}, {1902, 4}, {1903, 1}, {1905, 2},
    {1906, 2}, {1907, 1}, {1909, 1}, {1910, 6}, {1913, 1}, {1914, 8}, {1915, 1}, {1916, 4},
    {1918, 4}, {1919, 1}, {1921, 1}, {1922, 5}, {1923, 1}, {1927, 1}, {1929, 2}, {1930, 4},
    {1931, 1}, {1933, 1}, {1934, 2}, {1937, 1}, {1938, 12}, {1939, 1}, {1941, 1}, {1942, 2},
    {1943, 1}, {1945, 1}, {1946, 4}, {1947, 1}, {1948, 4}, {1949, 1}, {1951, 1}, {1954, 2},
    {1955, 1}, {1957, 1}, {1958, 6}, {1959, 1}, {1961, 1}, {1963, 1}, {1964, 4}, {1965, 2},
    {1966, 2}, {1967, 2}, {1969, 1}, {1970, 4}, {1973, 1}, {1974, 12}, {1975, 2}, {1977, 1},
    {1978, 4}, {1979, 1}, {1981, 1}, {1982, 2}, {1983, 2}, {1985, 1}, {1986, 6}, {1987, 1},
    {1990, 4}, {1991, 1}, {1993, 1}, {1994, 2}, {1995, 5}, {1996, 4}, {1997, 1}, {1999, 1},
};

}  // namespace gnum
