# q=3  check matrix of the extended ternary Golay [12,6,6] code; DRG {24,22,20;1,2,12}
122210100000
012221010000
212012001000
110111000100
222101000010
102122000001
