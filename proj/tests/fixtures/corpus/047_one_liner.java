class L{int a;int f(int b){return a+b;}void g(){f(1);if(a>0)a=0;else a=1;while(a<3)a++;}}
